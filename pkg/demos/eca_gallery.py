"""A small gallery of elementary rules from a centered impulse.

Rule tables follow the usual numbering: bit k of the rule number is the
next state for the neighborhood whose bits spell k as (left, center,
right). Evolution here keeps the row width fixed, padding with zeros or
wrapping around, which is what distinguishes these diagrams from the
shrinking difference pyramids next door.
"""

from diffca import RenderSpec, eca_evolve, impulse_row, render_eca, rule_table


def show(number: int, generations: int = 12) -> None:
    rule = rule_table(number)
    bits = "".join(str(b) for b in reversed(rule.table))
    print(f"rule {number}  (table {bits})")
    diagram = eca_evolve(impulse_row(2 * generations + 1), rule, generations)
    print(render_eca(diagram))
    print()


def main() -> None:
    for number in (90, 110, 182):
        show(number)

    print("boundary handling changes the picture once the cone hits the edge:")
    for boundary in ("zero", "periodic"):
        diagram = eca_evolve(impulse_row(9), 90, 8, boundary=boundary)
        print(f"--- {boundary}")
        print(render_eca(diagram, RenderSpec(format="ascii")))
        print()


if __name__ == "__main__":
    main()
