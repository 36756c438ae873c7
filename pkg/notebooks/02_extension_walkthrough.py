# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # One vertex of the extension, step by step
#
# Vertex 0 is being added with two uncoloured edges, to 1 and 2. Both
# neighbours miss exactly the colours {1, 2}, so no colour can be placed
# directly without risking a dead end. The engine swaps colours 1 and 3 along
# the path 1-3-4-2 first, which frees colour 3 at vertex 1.

# %%
import logging

from edgecolour import PartialEdgeColouring, build_graph, verify_proper
from edgecolour.colouring import missing_colours
from edgecolour.extension import ExtensionState, colour_one_vertex, try_case1

logging.basicConfig(level=logging.DEBUG, format="  %(message)s")

graph = build_graph(6, [(0, 1), (0, 2), (1, 3), (3, 4), (2, 4), (4, 5)])
c = PartialEdgeColouring(graph, 3)
c.assign(1, 3, 3)
c.assign(3, 4, 1)
c.assign(2, 4, 3)
for v in (0, 1, 2):
    print(f"F({v}) =", sorted(missing_colours(c, v)))

# %%
state = ExtensionState(c, 0, [1, 2])
print("direct colouring possible:", try_case1(state))
colour_one_vertex(state, check=True)

# %%
for u, v, colour in c.items():
    print(f"{u}-{v}: {colour}")
print(verify_proper(c).describe())
