"""Quick end-to-end check of the Python bindings."""

import golodkit

ci = golodkit.Ideal("(x^2, y*z)")
assert ci.vars == ["x", "y", "z"]
v = ci.golod()
assert v["status"] == "not_golod", v
cert = v["certificates"][0]
assert cert["kind"] == "cond2_violation"
assert cert["product"]["text"] == "x*z"

m2 = golodkit.Ideal("(x,y,z)").product("(x,y,z)")
assert str(m2) == "(x^2, x*y, x*z, y^2, y*z, z^2)"
assert m2.golod()["status"] == "golod"
assert m2.strongly_golod()

ex1 = golodkit.Ideal("(x^2, y^4, z^4, y*z)").integral_closure()
assert ex1 == golodkit.Ideal("(x^2, y^4, z^4, x*z^2, y*z, x*y^2)")
assert [1, 1, 1] in ex1 and [1, 0, 1] not in ex1
assert ex1.nec()

assert golodkit.Ideal("(x^2, y^2, z^2)").koszul_betti()["totals"] == [1, 3, 3, 1]
assert golodkit.Ideal("(x^2, y^2)", vars="x,y").koszul_products()["trivial"] is False
assert golodkit.Ideal("(x,y^2,y*z,z^2)").reduce().vars == ["y", "z"]

r = golodkit.Ideal("(x^2, y^2, z^2)").serre_compare(order=3)
assert r["gap"] is not None

assert golodkit.random(5) == golodkit.random(5)
report = golodkit.search("product3", 10, seed=1)
assert report["counts"]["not_golod"] == 0

try:
    golodkit.Ideal("(x^)")
except ValueError as e:
    assert "offset 3" in str(e)
else:
    raise AssertionError("parse error not raised")

print("python smoke test ok")
