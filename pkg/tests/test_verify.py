from fquant.branching import SubgroupEmbedding, identity_embedding
from fquant.lie import U, Torus, build_root_system, group
from fquant.models import HermitianModel, hermitian_quantization
from fquant.polytope import interval
from fquant.verify import (
    verify_convergence,
    verify_product_identity,
    verify_restriction_identity,
)

U1 = build_root_system(group(U(1)))
U2 = build_root_system(group(U(2)))
T2 = build_root_system(group(Torus(2)))
C1 = HermitianModel(U1, ((1,),))
C2 = HermitianModel(U2, ((1, 0), (0, 1)))


def test_identity_restriction():
    rep = verify_restriction_identity(C2, identity_embedding(U2), 6)
    assert rep.passed and rep.mismatches == []
    assert rep.details["bound_method"] == "hull"


def test_restriction_to_torus_reports_support():
    emb = SubgroupEmbedding(((1, 0), (0, 1)), T2, U2)
    rep = verify_restriction_identity(C2, emb, 6)
    # number of (a, b) with a, b <= 0 and a^2 + b^2 < 36
    expected = sum(1 for a in range(7) for b in range(7) if a * a + b * b < 36)
    assert rep.passed and rep.compared == expected


def test_product_trivial_orbit():
    rep = verify_product_identity(C2, (0, 0), 5)
    assert rep.passed and rep.compared == len(hermitian_quantization(C2, 5).coeffs)


def test_product_shift():
    rep = verify_product_identity(C1, (-1,), 6)
    assert rep.passed and rep.radius == 6


def test_convergence_report():
    rep = verify_convergence(C1, interval(U1, 2), 5)
    assert rep.passed
    assert [s["radius"] for s in rep.details["steps"]] == [2, 4, 6, 8, 10]
    data = rep.to_json()
    assert data["identity"] == "convergence" and data["passed"]
