"""
Demo script walking through the reference instances.

Shows exact loads, the flow network behind them, the lower-bound dynamics
with its PoA, and the 3SAT reduction.
"""
from two_sided_flg.core import (
    compute_equilibrium_loads,
    empirical_poa,
    extract_client_equilibrium,
    find_spe,
    is_client_equilibrium,
    optimal_placement_exact,
)
from two_sided_flg.flow import network_to_dot
from two_sided_flg.formats import serialize_distribution, serialize_placement, trace_to_log
from two_sided_flg.generators import (
    decode_assignment,
    ten_client_instance,
    three_client_instance,
    two_clause_formula,
    gen_3sat,
    gen_lower_bound,
)
from two_sided_flg.utils.constants import OUTPUT_SEPARATOR, OUTPUT_SUBSEPARATOR
from two_sided_flg.utils.formatter import OutputFormatter, format_rational


def demo_walkthrough():
    """Run every demo step in order."""
    print(OUTPUT_SEPARATOR)
    print("🏪 Two-Sided Facility Location Games Demo")
    print(OUTPUT_SEPARATOR)

    # Step 1: exact loads of the ten-client fixture
    print("\n步骤 1: 精确负载 / Step 1: Exact equilibrium loads")
    print(OUTPUT_SUBSEPARATOR)
    g, _, s = ten_client_instance()
    computation = compute_equilibrium_loads(g, s)
    print(OutputFormatter.format_loads(computation.loads))
    for index, extraction in enumerate(computation.rounds, 1):
        members = ", ".join(f"f{j}" for j in sorted(extraction.mns.members))
        print(f"  round {index}: {{{members}}} ratio {format_rational(extraction.mns.ratio)}")

    # Step 2: the flow network and the client equilibrium it certifies
    print("\n\n步骤 2: 流网络与客户均衡 / Step 2: Flow network and client equilibrium")
    print(OUTPUT_SUBSEPARATOR)
    g, _, s = three_client_instance()
    computation = compute_equilibrium_loads(g, s)
    first = computation.rounds[0].mns
    print(network_to_dot(first.network, first.witness_flow))
    sigma = extract_client_equilibrium(computation)
    print(serialize_distribution(sigma), end="")
    print(OutputFormatter.format_verdict("client-equilibrium", is_client_equilibrium(g, s, sigma)))

    # Step 3: dynamics and PoA on the lower-bound family
    print("\n\n步骤 3: 改进动态与无政府代价 / Step 3: Dynamics and price of anarchy")
    print(OUTPUT_SUBSEPARATOR)
    g, k = gen_lower_bound(2, 4)
    trace = find_spe(g, k, initial=(0, 1))
    print(trace_to_log(trace), end="")
    print(serialize_placement(trace.terminal))
    report = empirical_poa(g, k)
    print(OutputFormatter.format_poa_report(report))

    # Step 4: the 3SAT reduction
    print("\n\n步骤 4: 3SAT 归约 / Step 4: 3SAT reduction")
    print(OUTPUT_SUBSEPARATOR)
    formula = two_clause_formula()
    g, k = gen_3sat(formula)
    optimum = optimal_placement_exact(g, k)
    print(serialize_placement(optimum.placement))
    print(OutputFormatter.format_welfare(optimum.welfare))
    print(f"assignment {decode_assignment(g, formula, optimum.placement)}")

    print(f"\n{OUTPUT_SEPARATOR}")
    print(OutputFormatter.format_success("Demo completed successfully!"))
    print(OUTPUT_SEPARATOR)
    print("\n📝 注意 / Note:")
    print("  命令行工具可以通过管道组合 / The CLI composes through pipes:")
    print("    python cli.py gen lower-bound --k 2 --x 4 | python cli.py find-spe")
    print(OUTPUT_SEPARATOR)


def main():
    demo_walkthrough()


if __name__ == "__main__":
    main()
