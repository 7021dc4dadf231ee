"""Reference parameter tables and explicit logical states, transcribed verbatim.

Amplitudes in these listings are all positive reals, so each state is stored as
``{bit string: probability}``.
"""

TABLE_ROWS = [
    # (K, order, m, n, w, S, class sizes or None)
    (2, 2, 4, 4, (1, 1, 1, 1), (0, 2), (2, 6)),
    (2, 3, 6, 5, (1, 1, 1, 1, 3), (0, 4), (5, 5)),
    (2, 4, 8, 5, (1, 1, 1, 3, 3), (0, 6), (4, 3)),
    (2, 5, 10, 5, (1, 1, 4, 4, 4), (0, 2), (4, 2)),
    (2, 6, 12, 5, (4, 4, 4, 6, 6), (0, 2), (4, 6)),
    (2, 7, 14, 5, (2, 2, 2, 4, 4), (0, 6), (2, 7)),
    (2, 8, 16, 5, (2, 2, 4, 4, 8), (0, 10), (4, 4)),
    (2, 9, 18, 5, (2, 2, 4, 4, 6), (0, 8), (2, 5)),
    (2, 10, 10, 6, (1, 1, 1, 1, 4, 6), (0, 7), (3, 8)),
    (2, 11, 11, 6, (1, 1, 1, 1, 4, 4), (0, 8), (5, 3)),
    (2, 12, 12, 6, (1, 1, 1, 2, 3, 4), (0, 5), (2, 8)),
    (2, 13, 13, 6, (1, 1, 1, 2, 5, 5), (0, 10), (5, 3)),
    (2, 14, 14, 6, (1, 1, 1, 3, 3, 6), (0, 9), (4, 4)),
    (2, 15, 15, 6, (1, 1, 2, 2, 5, 6), (0, 11), (4, 4)),
    (2, 16, 16, 6, (1, 1, 2, 3, 4, 5), (0, 7), (2, 6)),
    (2, 17, 17, 6, (1, 1, 2, 4, 4, 6), (0, 8), (3, 5)),
    (2, 18, 18, 6, (1, 2, 3, 4, 5, 6), (0, 11), (3, 5)),
    (3, 3, 6, 6, (1, 1, 1, 1, 3, 3), (0, 2, 4), None),
    (3, 4, 8, 6, (1, 1, 1, 3, 3, 3), (0, 2, 4), None),
    (3, 6, 12, 6, (1, 1, 1, 5, 5, 7), (0, 6, 10), None),
    (3, 8, 16, 6, (1, 1, 4, 4, 7, 7), (0, 2, 8), None),
    (3, 10, 10, 6, (1, 1, 1, 4, 4, 4), (0, 2, 5), None),
    (3, 12, 12, 6, (2, 2, 3, 3, 4, 4), (0, 6, 7), None),
    (3, 14, 14, 6, (1, 1, 3, 4, 6, 6), (0, 2, 7), None),
    (3, 15, 15, 6, (1, 1, 4, 4, 6, 9), (0, 2, 10), None),
    (3, 16, 16, 6, (1, 2, 4, 4, 6, 7), (0, 8, 11), None),
    (4, 4, 8, 6, (1, 1, 1, 3, 3, 3), (0, 2, 4, 6), None),
    (4, 6, 12, 6, (1, 1, 3, 3, 5, 5), (0, 2, 6, 10), None),
]

EXPLICIT_STATES = [
    {
        "K": 2, "order": 2, "m": 4, "w": (1, 1, 1, 1), "S": (0, 2),
        "gate_exponents": (0, 2),
        "states": [
            {"0000": "1/2", "1111": "1/2"},
            {"0011": "1/2", "1100": "1/2"},
        ],
    },
    {
        "K": 2, "order": 3, "m": 6, "w": (1, 1, 1, 1, 3), "S": (0, 4),
        "gate_exponents": (0, 4),
        "states": [
            {"00000": "1/3", "01111": "1/3", "10111": "1/3"},
            {"00011": "1/3", "00101": "1/3", "11110": "1/3"},
        ],
    },
    {
        "K": 2, "order": 4, "m": 8, "w": (1, 1, 1, 3, 3), "S": (0, 6),
        "gate_exponents": (0, 6),
        "states": [
            {"00000": "1/4", "01111": "1/4", "10111": "1/4", "11011": "1/4"},
            {"00011": "1/2", "11101": "1/4", "11110": "1/4"},
        ],
    },
    {
        "K": 2, "order": 5, "m": 10, "w": (1, 1, 4, 4, 4), "S": (0, 2),
        "gate_exponents": (0, 2),
        "states": [
            {"00000": "2/5", "11011": "1/5", "11101": "1/5", "11110": "1/5"},
            {"00111": "2/5", "11000": "3/5"},
        ],
    },
    {
        "K": 2, "order": 6, "m": 12, "w": (4, 4, 4, 6, 6), "S": (0, 2),
        "gate_exponents": (0, 2),
        "states": [
            {"00011": "1/3", "11100": "1/2", "11111": "1/6"},
            {"01110": "1/3", "10101": "1/3", "11001": "1/6", "11010": "1/6"},
        ],
    },
    {
        "K": 2, "order": 7, "m": 14, "w": (2, 2, 2, 4, 4), "S": (0, 6),
        "gate_exponents": (0, 6),
        "states": [
            {"00000": "4/7", "11111": "3/7"},
            {"00101": "2/7", "01010": "2/7", "10001": "1/7", "10010": "1/7", "11100": "1/7"},
        ],
    },
    {
        "K": 2, "order": 8, "m": 16, "w": (2, 2, 4, 4, 8), "S": (0, 10),
        "gate_exponents": (0, 10),
        "states": [
            {"00000": "3/8", "00111": "1/8", "11011": "1/4", "11101": "1/4"},
            {"01001": "1/8", "01110": "3/8", "10001": "1/2"},
        ],
    },
    {
        "K": 2, "order": 9, "m": 18, "w": (2, 2, 4, 4, 6), "S": (0, 8),
        "gate_exponents": (0, 8),
        "states": [
            {"00000": "5/9", "11111": "4/9"},
            {"00110": "1/3", "01001": "2/9", "10001": "2/9", "11010": "1/9", "11100": "1/9"},
        ],
    },
    {
        "K": 2, "order": 10, "m": 10, "w": (1, 1, 1, 1, 4, 6), "S": (0, 7),
        "gate_exponents": (0, 7),
        "states": [
            {"000000": "3/10", "000011": "3/10", "111101": "2/5"},
            {"000101": "1/10", "001001": "1/10", "010001": "2/5", "100001": "1/10", "101110": "3/10"},
        ],
    },
    {
        "K": 2, "order": 11, "m": 11, "w": (1, 1, 1, 1, 4, 4), "S": (0, 8),
        "gate_exponents": (0, 8),
        "states": [
            {"000000": "3/11", "011111": "2/11", "101111": "2/11", "110111": "2/11", "111011": "2/11"},
            {"000011": "5/11", "111101": "3/11", "111110": "3/11"},
        ],
    },
    {
        "K": 2, "order": 12, "m": 12, "w": (1, 1, 1, 2, 3, 4), "S": (0, 5),
        "gate_exponents": (0, 5),
        "states": [
            {"000000": "7/12", "111111": "5/12"},
            {"000110": "1/4", "001001": "1/12", "010001": "1/4", "100001": "1/12", "101010": "1/6", "111100": "1/6"},
        ],
    },
    {
        "K": 2, "order": 13, "m": 13, "w": (1, 1, 1, 2, 5, 5), "S": (0, 10),
        "gate_exponents": (0, 10),
        "states": [
            {"000000": "3/13", "001111": "2/13", "010111": "2/13", "100111": "2/13", "111011": "4/13"},
            {"000011": "7/13", "111101": "3/13", "111110": "3/13"},
        ],
    },
    {
        "K": 2, "order": 14, "m": 14, "w": (1, 1, 1, 3, 3, 6), "S": (0, 9),
        "gate_exponents": (0, 9),
        "states": [
            {"000000": "5/14", "011111": "3/14", "101111": "3/14", "110111": "3/14"},
            {"000011": "2/7", "000101": "2/7", "111001": "1/14", "111110": "5/14"},
        ],
    },
    {
        "K": 2, "order": 15, "m": 15, "w": (1, 1, 2, 2, 5, 6), "S": (0, 11),
        "gate_exponents": (0, 11),
        "states": [
            {"000000": "4/15", "001111": "1/3", "110111": "1/5", "111011": "1/5"},
            {"000011": "7/15", "011101": "2/15", "101101": "2/15", "111110": "4/15"},
        ],
    },
    {
        "K": 2, "order": 16, "m": 16, "w": (1, 1, 2, 3, 4, 5), "S": (0, 7),
        "gate_exponents": (0, 7),
        "states": [
            {"000000": "9/16", "111111": "7/16"},
            {"000110": "5/16", "001001": "3/16", "011010": "1/16", "101010": "1/16", "110001": "1/4", "111100": "1/8"},
        ],
    },
    {
        "K": 2, "order": 17, "m": 17, "w": (1, 1, 2, 4, 4, 6), "S": (0, 8),
        "gate_exponents": (0, 8),
        "states": [
            {"000000": "9/17", "011111": "4/17", "101111": "4/17"},
            {"000110": "7/17", "001001": "6/17", "110001": "2/17", "111010": "1/17", "111100": "1/17"},
        ],
    },
    {
        "K": 2, "order": 18, "m": 18, "w": (1, 2, 3, 4, 5, 6), "S": (0, 11),
        "gate_exponents": (0, 11),
        "states": [
            {"000000": "7/18", "001111": "1/6", "110111": "4/9"},
            {"000011": "2/9", "010110": "5/18", "011001": "1/18", "100101": "1/3", "111010": "1/9"},
        ],
    },
    {
        "K": 3, "order": 3, "m": 6, "w": (1, 1, 1, 1, 3, 3), "S": (0, 2, 4),
        "gate_exponents": (0, 2, 4),
        "states": [
            {"000000": "1/3", "011110": "1/3", "101101": "1/3"},
            {"011000": "1/3", "001100": "1/3", "100111": "1/3"},
            {"111100": "1/3", "001010": "1/3", "000101": "1/3"},
        ],
    },
    {
        "K": 3, "order": 4, "m": 8, "w": (1, 1, 1, 3, 3, 3), "S": (0, 2, 4),
        "gate_exponents": (0, 2, 4),
        "states": [
            {"000000": "1/4", "110110": "1/4", "101101": "1/4", "101011": "1/4"},
            {"101000": "1/4", "011000": "1/4", "100111": "1/2"},
            {"100100": "1/4", "001010": "1/4", "100001": "1/4", "111111": "1/4"},
        ],
    },
    {
        "K": 3, "order": 6, "m": 12, "w": (1, 1, 1, 5, 5, 7), "S": (0, 6, 10),
        "gate_exponents": (0, 6, 10),
        "states": [
            {"000000": "1/6", "110110": "1/6", "101110": "1/6", "011110": "1/6", "000101": "1/6", "000011": "1/6"},
            {"001100": "1/3", "100010": "1/3", "010111": "1/3"},
            {"000110": "2/3", "111001": "1/3"},
        ],
    },
    {
        "K": 3, "order": 8, "m": 16, "w": (1, 1, 4, 4, 7, 7), "S": (0, 2, 8),
        "gate_exponents": (0, 2, 8),
        "states": [
            {"000000": "3/8", "011110": "1/8", "101101": "1/8", "110011": "3/8"},
            {"000111": "1/4", "001011": "1/4", "110000": "1/2"},
            {"001100": "1/8", "010010": "3/8", "100001": "3/8", "111111": "1/8"},
        ],
    },
    {
        "K": 3, "order": 10, "m": 10, "w": (1, 1, 1, 4, 4, 4), "S": (0, 2, 5),
        "gate_exponents": (0, 2, 5),
        "states": [
            {"000000": "2/5", "011110": "1/5", "110101": "1/5", "101011": "1/5"},
            {"110000": "1/5", "101000": "1/5", "011000": "1/5", "000111": "2/5"},
            {"010100": "3/10", "001010": "3/10", "100001": "3/10", "111111": "1/10"},
        ],
    },
    {
        "K": 3, "order": 12, "m": 12, "w": (2, 2, 3, 3, 4, 4), "S": (0, 6, 7),
        "gate_exponents": (0, 6, 7),
        "states": [
            {"000000": "5/12", "011110": "1/4", "101110": "1/4", "110011": "1/12"},
            {"001100": "5/12", "010010": "1/4", "100010": "1/4", "111111": "1/12"},
            {"000110": "1/2", "001001": "1/12", "001010": "1/12", "111000": "1/3"},
        ],
    },
    {
        "K": 3, "order": 14, "m": 14, "w": (1, 1, 3, 4, 6, 6), "S": (0, 2, 7),
        "gate_exponents": (0, 2, 7),
        "states": [
            {"000000": "2/7", "101110": "1/7", "101101": "1/7", "110011": "3/7"},
            {"110000": "3/7", "101011": "2/7", "000111": "2/7"},
            {"001100": "1/14", "100010": "1/7", "010010": "3/14", "100001": "5/14", "111111": "3/14"},
        ],
    },
    {
        "K": 3, "order": 15, "m": 15, "w": (1, 1, 4, 4, 6, 9), "S": (0, 2, 10),
        "gate_exponents": (0, 2, 10),
        "states": [
            {"000011": "1/3", "011110": "1/15", "101110": "1/15", "110101": "4/15", "111001": "4/15"},
            {"001101": "2/5", "110000": "2/15", "110011": "7/15"},
            {"000110": "1/15", "001010": "1/15", "010001": "4/15", "100001": "4/15", "111111": "1/3"},
        ],
    },
    {
        "K": 3, "order": 16, "m": 16, "w": (1, 2, 4, 4, 6, 7), "S": (0, 8, 11),
        "gate_exponents": (0, 8, 11),
        "states": [
            {"000000": "5/16", "011110": "3/16", "101101": "7/16", "110011": "1/16"},
            {"001100": "7/16", "010010": "1/16", "100001": "5/16", "111111": "3/16"},
            {"000101": "1/8", "001001": "3/8", "100110": "1/4", "111100": "1/4"},
        ],
    },
    {
        "K": 4, "order": 4, "m": 8, "w": (1, 1, 1, 3, 3, 3), "S": (0, 2, 4, 6),
        "gate_exponents": (0, 2, 4, 6),
        "states": [
            {"000000": "1/4", "011110": "1/4", "110101": "1/4", "101011": "1/4"},
            {"110000": "1/2", "001111": "1/2"},
            {"001100": "1/4", "010010": "1/4", "100001": "1/4", "111111": "1/4"},
            {"000110": "1/2", "111001": "1/2"},
        ],
    },
    {
        "K": 4, "order": 6, "m": 12, "w": (1, 1, 3, 3, 5, 5), "S": (0, 2, 6, 10),
        "gate_exponents": (0, 2, 6, 10),
        "states": [
            {"000000": "1/6", "101110": "1/6", "011101": "1/6", "110011": "1/2"},
            {"110000": "1/3", "101011": "1/3", "010111": "1/3"},
            {"100010": "1/3", "010001": "1/3", "111111": "1/3"},
            {"111010": "1/3", "110101": "1/3", "000011": "1/3"},
        ],
    },
]

# Two-extremal-string family, explicit n=5 and n=6 listings: {bit string: probability}.
EXTREMA_EXAMPLES = [
    {
        "n": 5, "m": 5, "s": 2, "w": (1, 1, 1, 1, 1), "gate_exponents": (0, 2),
        "states": [
            {"00000": "3/5", "11111": "2/5"},
            {
                **{x: "1/10" for x in ("11000", "10100", "10010", "01100", "01010", "00110")},
                **{x: "1/10" for x in ("10001", "01001", "00101", "00011")},
            },
        ],
    },
    {
        "n": 6, "m": 7, "s": 3, "w": (1, 1, 1, 1, 1, 2), "gate_exponents": (0, 3), "z": "1/7",
        "states": [
            {"000000": "4/7", "111111": "3/7"},
            {
                **{
                    x: "2/35"
                    for x in (
                        "111000", "110100", "110010", "101100", "101010",
                        "100110", "011100", "011010", "010110", "001110",
                    )
                },
                **{x: "3/35" for x in ("100001", "010001", "001001", "000101", "000011")},
            },
        ],
    },
]

# Even-parity family: (n, m, w, S, supports per logical state, order).
EVEN_PARITY_EXAMPLES = [
    (4, 6, (1, 2, 4, 5), (0, 3), (("0000", "0110", "1001", "1111"), ("0011", "1100")), 2),
    (
        6, 8, (1, 2, 3, 5, 6, 7), (0, 4),
        (
            ("000000", "001100", "010010", "011110", "100001", "101101", "110011", "111111"),
            ("000101", "010111", "101000", "111010"),
        ),
        2,
    ),
    (
        6, 8, (6, 4, 0, 2, 7, 5), (0, 2),
        (
            ("000000", "011011", "100100", "111111"),
            ("001100", "010111", "101011", "110000"),
        ),
        4,
    ),
    (
        6, 9, (1, 2, 5, 5, 7, 1), (0, 3, 6),
        (
            ("000000", "001111", "010010", "101110", "110101", "111001"),
            ("000110", "001010", "010001", "101101", "110000", "111111"),
            ("000101", "001001", "010111", "011011", "100100", "101000", "110110", "111010"),
        ),
        3,
    ),
]

# ((6,4,2)) controlled-phase code: every amplitude is +-1/4.
C642_EXPANSION = [
    "+000000 +001001 +000101 +000011 +001100 +001010 +000110 +001111 "
    "+110000 +111001 +110101 +110011 +111100 +111010 +110110 +111111",
    "+000000 -001001 -000101 +000011 +001100 -001010 -000110 +001111 "
    "+110000 -111001 -110101 +110011 +111100 -111010 -110110 +111111",
    "+000000 -001001 +000101 -000011 -001100 +001010 -000110 +001111 "
    "+110000 -111001 +110101 -110011 -111100 +111010 -110110 +111111",
    "+100000 +010001 +101001 +011000 +100101 +010100 -100011 -010010 "
    "+101100 +011101 -101010 -011011 -100110 -010111 -101111 -011110",
]
