"""Smoke test for the nvgroups extension module.

Build and install it first, for example:
    maturin build --release -m crates/py/Cargo.toml && pip install target/wheels/nvgroups-*.whl
"""

import json

import nvgroups as nv


def main():
    a, b = nv.Address("(0,-)"), nv.Address("(1,-)")
    assert a.arity == 2 and a.is_incomparable(b) and not a.is_prefix_of(b)
    assert nv.Address("(01,1)").measure() == "1/8"
    assert nv.Address("(010,00)").weight() == (3, 1)
    assert len({a, nv.Address("(0,-)"), b}) == 2

    t = nv.Element.transposition(a, b)
    assert (t * t).is_identity()
    assert t ** 2 == nv.Element.identity(2)
    split = nv.evaluate("t[(00,-)|(10,-)] * t[(01,-)|(11,-)]", 2)
    assert split == t and len(split.reduce()) == 2
    assert nv.equals("t[(0,-)|(1,-)]", "t[(00,-)|(10,-)] * t[(01,-)|(11,-)]", 2)
    assert str(t.apply("(01,1)")) == "(11,1)"

    g = nv.evaluate("B(2,(1,-)) * t[(0,-)|(10,1)]", 2)
    assert nv.Element.from_json(g.to_json()) == g
    assert (g * g.invert()).is_identity()
    assert g.conjugate(t) == t.invert() * g * t

    for n in (2, 3):
        order = nv.order("c()", n)
        assert order is not None and order % 2 == 1, (n, order)
    assert nv.evaluate("baker(2,(-,-))", 2).order(cap=50) is None
    assert len(nv.delta(2)) == 16 and str(nv.delta(2)[0]) == "(00,00)"

    assert nv.parse("t[(0,-)|(1,-)]  ^ 2", 2) == "t[(0,-)|(1,-)]^2"
    try:
        nv.evaluate("t[(0,-)|(0,-)]", 2)
    except nv.NvError as e:
        assert "incomparable" in str(e)
    else:
        raise AssertionError("expected NvError")

    svg = nv.evaluate("baker(2,(-,-))", 2).render()
    assert svg.startswith("<?xml") and svg.count("<rect") == 4
    assert "(-,-,-) -> (-,-,-)" in nv.Element.identity(3).render()

    reports = nv.verify("hm", 2, m_max=2)
    assert len(reports) == 17 and all(r["failed"] == 0 for r in reports)
    reports = nv.verify("finite", 2)
    assert sum(r["checked"] for r in reports) == 17
    assert all(r["failed"] == 0 for r in reports)
    json.dumps(reports)

    print("nvgroups smoke test passed")


if __name__ == "__main__":
    main()
