# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Reducing k-edge colouring to the semi-core
#
# Only the vertices of maximum degree and their neighbours matter when
# deciding whether a graph with maximum degree `k` can be edge coloured with
# `k` colours. Everything further away can always be coloured afterwards.

# %%
from edgecolour import decompose, extend, solve_exact, verify_proper
from edgecolour.graph import semi_core_edge_bound
from edgecolour.instances import gen_few_max_degree

k, p = 3, 2
graph = gen_few_max_degree(p, k, 2000, seed=42)
print(graph, "max degree vertices:", graph.degrees().count(k))

# %% [markdown]
# The semi-core stays tiny however large the graph gets.

# %%
dec = decompose(graph)
print("core:", dec.core_vertices)
print("semi-core:", dec.q, "vertices,", dec.semi_core.m, "edges;",
      "bound:", semi_core_edge_bound(k, dec.p))
print("vertices left for the extension:", len(dec.excluded_order))

# %%
c_prime = solve_exact(dec.semi_core, k)
print("semi-core colouring:", c_prime.colours)

# %% [markdown]
# Extending that colouring vertex by vertex yields a colouring of the whole graph.

# %%
colouring = extend(graph, dec, c_prime, k)
print(verify_proper(colouring, require_complete=True).describe())
