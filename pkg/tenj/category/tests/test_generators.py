import pytest

from tenj.category.cochains import (
    CochainTable,
    coboundary,
    cochain_from_function,
    random_cochain,
    trivial_cochain,
    validate_cocycle,
)
from tenj.category.data import same_data, validate_category
from tenj.category.generators import (
    from_parameters,
    gen_pointed_braided,
    gen_twisted_dw,
    gen_yetter_2group,
    group_like_parameters,
    pointed_preset,
    trivial_category,
)
from tenj.category.braided import braided_preset
from tenj.category.groups import group_preset
from tenj.category.labels import scalar_tensor
from tenj.errors import InvalidCocycle, ParseError, UnsupportedTwist, ValidationError
from tenj.scalar import ONE, Cyclotomic


def corrupted_omega():
    z2 = group_preset("Z2")
    values = dict(trivial_cochain(z2, 4).values)
    values["1", "0", "0", "0"] = -ONE
    return CochainTable(z2, 4, values)


@pytest.mark.parametrize(
    "cat, dim_c",
    [
        (trivial_category(), 1),
        (gen_twisted_dw("Z2"), 2),
        (gen_twisted_dw("Z3"), 3),
        (pointed_preset("semion"), Cyclotomic.from_rational("1/2")),
        (gen_pointed_braided("Z3"), Cyclotomic.from_rational("1/3")),
        (gen_yetter_2group("Z2", "Z2"), 1),
        (gen_yetter_2group("Z3", "Z2"), Cyclotomic.from_rational("3/2")),
    ],
)
def test_total_dimension(cat, dim_c):
    assert cat.total_dimension == dim_c
    assert validate_category(cat).passed


def test_dw_shape():
    cat = gen_twisted_dw("Z3")
    assert cat.objects == ("0", "1", "2")
    assert cat.fusion_list("1", "2", "0") == ("*",)
    assert cat.fusion_list("1", "2", "1") == ()
    assert cat.d("1") == ONE
    assert cat.unit == "0"
    assert group_like_parameters(cat)[1].elements == ("*",)


def test_pointed_shape():
    cat = pointed_preset("fermion")
    assert cat.objects == ("*",)
    assert cat.fusion_list("*", "*", "*") == ("0", "1")
    assert cat.d("*") == 2
    assert cat.provenance["preset"] == "fermion"


def test_flat_tetrahedra():
    cat = gen_yetter_2group("Z2", "Z2")
    flat = (("0", "1", "1", "1", "1", "0"), ("1", "0", "1", "0"))
    assert cat.tetra_dim(flat) == 1
    # a012 a023 != a013 a123
    assert cat.tetra_dim((flat[0], ("1", "1", "1", "0"))) == 0
    # g01 g12 != g02
    assert cat.tetra_dim((("1", "1", "1", "1", "1", "0"), flat[1])) == 0


def test_dw_weight():
    z2 = group_preset("Z2")
    omega = coboundary(random_cochain(z2, 3, seed=3))
    cat = gen_twisted_dw(z2, omega)
    # g01 = 1, g12 = 1, g23 = 0, g34 = 1, edges in lexicographic order
    edges = ("1", "0", "0", "1", "1", "1", "0", "0", "1", "1")
    simplex = (edges, ("*",) * 10)
    value = omega("1", "1", "0", "1")
    assert cat.ten_j(simplex, 1)[0, 0, 0, 0, 0] == value
    assert cat.ten_j(simplex, -1)[0, 0, 0, 0, 0] == value.inverse()


def test_degenerations():
    # a 2-group with trivial 1-morphism group is Dijkgraaf-Witten data
    assert same_data(gen_yetter_2group("Z2", "1"), gen_twisted_dw("Z2"))
    # a 2-group with trivial object group is pointed braided data
    for preset in ("boson", "fermion", "semion"):
        yetter = gen_yetter_2group("1", "Z2", braiding=braided_preset(preset))
        assert same_data(yetter, pointed_preset(preset))
    assert not same_data(pointed_preset("semion"), pointed_preset("antisemion"))


def test_invalid_cocycle():
    with pytest.raises(InvalidCocycle):
        gen_twisted_dw("Z2", corrupted_omega())
    with pytest.raises(InvalidCocycle):
        gen_yetter_2group("Z2", "Z2", corrupted_omega())
    cat = gen_twisted_dw("Z2", corrupted_omega(), check=False)
    assert cat.local.omega is not None


def test_unsupported_twists():
    with pytest.raises(UnsupportedTwist):
        gen_yetter_2group("Z2", "S3")
    with pytest.raises(UnsupportedTwist):
        gen_yetter_2group("Z2", "Z2", action={"1": {"0": "1", "1": "0"}})
    z2 = group_preset("Z2")
    # x^3, the generator of H^3(Z2; Z2)
    postnikov = cochain_from_function(z2, 3, lambda a, b, c: -1 if a == b == c == "1" else 1)
    assert validate_cocycle(postnikov).passed
    with pytest.raises(UnsupportedTwist):
        gen_yetter_2group("Z2", "Z2", postnikov=postnikov)
    gen_yetter_2group("Z2", "Z2", postnikov=trivial_cochain(z2, 3))


def test_pointed_dims():
    with pytest.raises(ValidationError, match=r"\(3,3\)"):
        gen_pointed_braided("Z2", dims={"1": -1})
    cat = gen_pointed_braided("Z2", dims={"1": -1}, check=False)
    assert cat.dim_mor["1"] == -ONE
    assert cat.total_dimension == Cyclotomic.from_rational("1/2")
    # all +1 is the default and needs no check
    assert same_data(gen_pointed_braided("Z2", dims={"0": 1, "1": 1}), gen_pointed_braided("Z2"))
    with pytest.raises(ValueError):
        gen_pointed_braided("Z2", dims={"1": 2})
    with pytest.raises(ValidationError):
        from_parameters({"generator": "pointed", "preset": "boson", "dims": {"1": -1}})


def test_explicit_table_overrides_weight():
    simplex = (("*",) * 10, ("0",) * 10)
    cat = gen_yetter_2group("1", "Z2", table={simplex: -ONE})
    assert cat.ten_j(simplex, 1)[0, 0, 0, 0, 0] == -ONE
    assert cat.ten_j(simplex, -1)[0, 0, 0, 0, 0] == -ONE
    assert cat.tetra_dim((("*",) * 6, ("1", "0", "0", "1"))) == 1
    assert cat.provenance["explicit_table"]
    assert (cat.pairing((("*",) * 6, ("0",) * 4)) == scalar_tensor(ONE, 2)).all()


def test_from_parameters():
    assert same_data(from_parameters({"generator": "dw", "group": "Z3"}), gen_twisted_dw("Z3"))
    semion = from_parameters({"generator": "pointed", "preset": "semion", "name": "s"})
    assert semion.name == "s"
    assert same_data(semion, pointed_preset("semion"))
    explicit = from_parameters(
        {
            "generator": "pointed",
            "group": "Z2",
            "F": {"values": {"1,1,1": "-1"}, "default": "1"},
            "R": [["1", "1"], ["1", "zeta(4,1)"]],
        }
    )
    assert same_data(explicit, semion)
    yetter = from_parameters({"generator": "yetter", "G": "Z2", "A": "Z2", "preset": "fermion"})
    assert group_like_parameters(yetter)[0].name == "Z2"
    assert same_data(from_parameters({"generator": "trivial"}), trivial_category())
    with pytest.raises(ParseError):
        from_parameters({"generator": "levin-wen"})
