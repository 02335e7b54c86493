"""Smoke test for the compiled bindings.

Build first with `pip install --no-build-isolation ./crates/python`.
"""

import json

import lieforge


def main():
    psi = lieforge.idempotent("dynkin", 4)
    assert psi.is_primitive() and psi.is_lie() and psi.is_in_sym()
    assert psi.quasi_scalar() == "4"
    assert set(psi.pbw()) <= set(lieforge.pbw_basis(4))

    d = lieforge.idempotent("catalan", 4, "1", "2")
    assert d.is_in_sym() and d.is_primitive()
    assert d.internal(d) == d.scale(d.quasi_scalar())

    x = lieforge.expand("[[1,2],3]")
    assert str(x) == "G(123) - G(213) - G(312) + G(321)"
    assert lieforge.Element.from_json(x.to_json()) == x
    assert x.coeff([2, 1, 3]) == "-1"
    assert (x - x).terms() == []

    g1 = lieforge.Element.basis([1])
    g12 = lieforge.Element.basis([1, 2])
    assert (g1 * g1).terms() == [([1, 2], "1"), ([2, 1], "1")]
    assert (g12 * g1).grade == 3

    assert lieforge.catalan_text(3, "ribbon") == "(a+b)*R(3) - a*R(2,1) - b*R(1,2) + (a+b)*R(1,1,1)"
    assert len(lieforge.pbw_basis(4)) == 6
    assert len(lieforge.binary_trees(4)) == 14
    assert lieforge.class_table("lr", 8)[-1] == (8, [1, 3, 10, 14, 10, 3, 1])
    assert sum(len(c[1]) for c in lieforge.tree_classes("l", 4)) == 14
    assert lieforge.flows("[[],[]]")

    for check in ("catpbw", "funeq", "kreweras", "solomon"):
        assert lieforge.verify(check, 4), check

    code, out, _ = lieforge.run_cli(["verify", "catpbw", "--n", "4"])
    assert code == 0 and json.loads(out) == {"ok": True, "n": 4}
    code, _, _ = lieforge.run_cli(["--bogus"])
    assert code == 2

    print("python smoke test passed")


if __name__ == "__main__":
    main()
