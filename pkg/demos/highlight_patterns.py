"""Highlight where a small row of cells occurs inside a pyramid.

Matching is cellwise coverage: every cell under some occurrence of the
pattern is marked, and overlapping occurrences simply merge.
"""

from diffca import (
    RenderSpec,
    evolve,
    highlight_pyramid,
    load_fixture,
    parse_expression,
    render_ascii,
    render_svg,
)


def main() -> None:
    pyramid = evolve(load_fixture("default-p"))

    for pattern_text in ("0-", "8-8", "1-1"):
        pattern = parse_expression(pattern_text)
        mask = highlight_pyramid(pyramid, pattern)
        print(f"pattern {pattern_text!r} covers {mask.count()} cells")
        print(render_ascii(pyramid, mask, RenderSpec(palette="mask")))
        print()

    # the same mask drives the graphical formats
    mask = highlight_pyramid(pyramid, parse_expression("0-"))
    doc = render_svg(pyramid, mask, RenderSpec(format="svg", cell_px=12))
    path = "default_p_zeros.svg"
    with open(path, "w", encoding="utf-8") as f:
        f.write(doc + "\n")
    print(f"wrote {path} ({doc.count('<rect')} cells)")


if __name__ == "__main__":
    main()
