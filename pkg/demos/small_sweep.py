"""A small sweep, its catalog, and a re-verification pass.

    python demos/small_sweep.py [out.jsonl]
"""

import contextlib
import io
import sys
import tempfile
from pathlib import Path

from sslp.catalog import read_catalog, write_catalog
from sslp.cli import main as cli
from sslp.sweep import SweepConfig, max_order_summary, order_counts, sweep_with_flags

config = SweepConfig(n=5, K=2, m_min=4, m_max=12)
result = sweep_with_flags(config)
print(f"{len(result.hits)} hits, {len(result.flagged)} flagged")
print("rejected by stage:", dict(sorted((k, v) for k, v in result.stats.items() if k not in ("candidates", "hits"))))
print("hits per logical order:", order_counts(result.hits))
print("max order:", max_order_summary(result.hits))

# best hit per order, with its smallest scaling-equivalent form
best = {}
for h in result.hits:
    best.setdefault(h.order, h)
for order, h in best.items():
    rep_w, rep_S = h.scaling_representative
    print(f"  order {order:2d}: m={h.params.m} w={h.params.w} S={h.params.S}  (representative w={rep_w} S={rep_S})")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp()) / "n5.jsonl"
write_catalog(result.hits + result.flagged, out)
assert read_catalog(out) == result.hits + result.flagged
print(f"\ncatalog: {out} ({out.stat().st_size} bytes); re-verifying from disk:")
buf = io.StringIO()
with contextlib.redirect_stdout(buf):
    status = cli(["verify", "--in", str(out), "--mode", "rational"])
print("  " + buf.getvalue().splitlines()[-1])
print(f"  verify exit status {status}")
