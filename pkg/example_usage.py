#!/usr/bin/env python3
"""
Example usage of the two_sided_flg package.

This script shows the library API without going through the CLI.
"""
import sys
import os

# Add src to path for direct execution (not needed if package is installed)
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

# Example 1: Build an instance and compute exact loads
print("=" * 80)
print("Example 1: Exact equilibrium loads")
print("=" * 80)

from two_sided_flg.core import HostGraph, Placement, compute_equilibrium_loads, eq_oracle_loads

# Clients 1 and 2 reach vertex 0; client 2 also reaches vertex 3.
g = HostGraph.from_edges([1, 1, 1, 2], [(1, 0), (2, 0), (2, 3)])
s = Placement((0, 3))

computation = compute_equilibrium_loads(g, s)
print(f"✅ Loads: {[str(load) for load in computation.loads]}")
print(f"   Oracle check: {eq_oracle_loads(g, s).round(6).tolist()}")

# Example 2: Facility dynamics and the welfare of the stable placement
print("\n" + "=" * 80)
print("Example 2: Improving-response dynamics")
print("=" * 80)

from two_sided_flg.core import find_spe, optimal_placement_exact, social_welfare
from two_sided_flg.generators import gen_lower_bound

g, k = gen_lower_bound(2, 4)
trace = find_spe(g, k, initial=(0, 1))
optimum = optimal_placement_exact(g, k)
print(f"✅ Stable placement {tuple(trace.terminal)} after {trace.move_count} moves")
print(f"   Welfare {social_welfare(g, trace.terminal)} vs optimum {optimum.welfare}")

# Example 3: Text formats
print("\n" + "=" * 80)
print("Example 3: Using the text formats")
print("=" * 80)

from two_sided_flg.formats import serialize_loads, write_document

print(write_document(g, k, trace.terminal), end="")
print(serialize_loads(compute_equilibrium_loads(g, trace.terminal).loads), end="")

print("\n" + "=" * 80)
print("✅ All examples completed successfully!")
print("=" * 80)
