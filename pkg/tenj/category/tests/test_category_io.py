import json

import pytest

from tenj.category.data import explicit_copy, same_data
from tenj.category.generators import gen_twisted_dw, gen_yetter_2group, pointed_preset
from tenj.category.io import category_from_dict, category_to_dict, load_category, save_category
from tenj.errors import ParseError, ValidationError
from tenj.fixtures import FIXTURE_DIR
from tenj.scalar import ONE


def test_generator_reference_round_trip(tmp_path):
    cat = pointed_preset("semion")
    path = tmp_path / "semion.json"
    save_category(cat, path)
    data = json.loads(path.read_text())
    assert data["generator"] == "pointed"
    assert data["preset"] == "semion"
    loaded = load_category(path)
    assert loaded.name == "semion"
    assert same_data(loaded, cat)


@pytest.mark.parametrize(
    "cat",
    [gen_twisted_dw("Z3"), pointed_preset("fermion"), gen_yetter_2group("Z2", "Z2")],
    ids=lambda cat: cat.name,
)
def test_explicit_round_trip(tmp_path, cat):
    path = tmp_path / "explicit.json"
    save_category(cat, path, explicit=True)
    data = json.loads(path.read_text())
    assert data["format"] == "tenj-category"
    assert "generator" not in data
    loaded = load_category(path)
    assert same_data(loaded, cat)
    assert loaded.symmetry == cat.symmetry
    assert same_data(explicit_copy(cat), loaded)


def test_table_override_saved_explicitly():
    simplex = (("*",) * 10, ("0",) * 10)
    cat = gen_yetter_2group("1", "Z2", table={simplex: -ONE})
    assert "generator" not in category_to_dict(cat)


def test_zero_morphism_dimension(tmp_path):
    data = category_to_dict(gen_twisted_dw("Z2"), explicit=True)
    data["dim_mor"]["*"] = "0"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(ValidationError):
        load_category(path)
    assert load_category(path, validate=False).dim_mor["*"] == 0


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"objects": ["a"]},
        {"generator": "pointed", "group": "Q8"},
        {"generator": "unknown"},
        {"generator": "dw", "group": "Z2", "omega": {"values": {"1,1": "1"}}},
    ],
)
def test_parse_errors(data):
    with pytest.raises(ParseError):
        category_from_dict(data, "cat.json")


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"objects": [')
    with pytest.raises(ParseError):
        load_category(path)


def test_bad_fusion_key():
    data = category_to_dict(gen_twisted_dw("Z2"), explicit=True)
    data["fusion"]["0,1,x"] = ["*"]
    with pytest.raises(ParseError):
        category_from_dict(data, "cat.json")


def test_yaml_target(tmp_path):
    path = tmp_path / "semion.yaml"
    path.write_text(
        "category:\n  _target_: tenj.category.generators.pointed_preset\n  preset: semion\n"
    )
    assert same_data(load_category(path), pointed_preset("semion"))
    path.write_text("category:\n  _target_: tenj.category.generators.no_such_generator\n")
    with pytest.raises(ParseError):
        load_category(path)


@pytest.mark.parametrize(
    "name",
    ["dw_z2.json", "dw_z3.json", "boson.json", "semion.json", "yetter_z2_z2.json", "trivial.json"],
)
def test_shipped_categories(name):
    cat = load_category(FIXTURE_DIR / name)
    assert cat.total_dimension
