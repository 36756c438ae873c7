# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Chromatic index, and how the phases scale
#
# The chromatic index is always the maximum degree or one more. When the
# palette exceeds the maximum degree the extension alone builds a colouring,
# which is how the `Δ + 1` witnesses below are produced.

# %%
from edgecolour import chromatic_index, max_degree
from edgecolour.cli import bench_rows
from edgecolour.instances import gen_complete, gen_cycle, gen_petersen

for name, graph in [("C5", gen_cycle(5)), ("C6", gen_cycle(6)), ("K4", gen_complete(4)),
                    ("K5", gen_complete(5)), ("Petersen", gen_petersen())]:
    value, _ = chromatic_index(graph)
    cls = 1 if value == max_degree(graph) else 2
    print(f"{name:9s} max degree {max_degree(graph)}  chromatic index {value}  (Class {cls})")

# %% [markdown]
# With `k` and the number of maximum-degree vertices fixed, solving the
# semi-core costs the same at every size; only the linear phases grow.

# %%
for row in bench_rows(3, 2, [1_000, 4_000, 16_000], seed=0, repeats=3):
    print(f"n={row['n']:>6}  semicore {row['t_semicore'] * 1e3:7.3f} ms  "
          f"extend {row['t_extend'] * 1e3:8.2f} ms")
