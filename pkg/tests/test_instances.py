import json

import pytest

from cyclicdual import instance_file, instances
from cyclicdual.instance_file import InstanceFormatError
from cyclicdual.orbit_cat import validate

NAMES = instances.names()


def test_catalog_contents():
    assert NAMES[:4] == ["trivial", "z6-two-normals", "z30-primes", "s3-collapse"]
    assert len(NAMES) == 10
    assert "FINITIZED" in instances.entry("z30-primes").provenance


def test_unknown():
    with pytest.raises(instances.UnknownInstance):
        instances.entry("nope")
    with pytest.raises(KeyError):
        instances.build("nope")


@pytest.mark.parametrize("name", NAMES)
def test_expected_checks(name):
    reports = instances.run_expected_checks(name)
    assert reports and all(r.ok for r in reports), [r.check for r in reports if not r.ok]


@pytest.mark.parametrize("name", NAMES)
def test_roundtrip_bit_exact(name):
    text = instance_file.dumps(instances.build(name))
    again = instance_file.dumps(instance_file.loads(text))
    assert again == text
    assert json.loads(text)["version"] == 1


@pytest.mark.parametrize("name", NAMES)
def test_roundtrip_preserves_structure(name, tmp_path):
    inst = instances.build(name)
    path = tmp_path / f"{name}.json"
    instance_file.dump(inst, path)
    back = instance_file.load(path)
    assert back.cm == inst.cm and back.preorder == inst.preorder
    assert back.presheaf == inst.presheaf and back.duality == inst.duality
    assert back.cosieve == inst.cosieve and back.name == name
    assert all(r.ok for r in validate(back))


def test_shared_group_object():
    back = instance_file.loads(instance_file.dumps(instances.build("s3-collapse")))
    assert back.cm.A is back.cm.G


def _data(name="s3-collapse"):
    return json.loads(instance_file.dumps(instances.build(name)))


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(extra=1),
    lambda d: d.update(version=2),
    lambda d: d["crossed_module"].pop("t"),
    lambda d: d["crossed_module"]["t"].append(0),
    lambda d: d["crossed_module"]["G"]["table"][0].__setitem__(0, 9),
    lambda d: d["crossed_module"]["G"]["table"][1].__setitem__(1, 1),
    lambda d: d["preorder"]["leq"][0].__setitem__(0, 1),
    lambda d: d["presheaf"].__setitem__(0, [0, 3]),
    lambda d: d["duality"].__setitem__(0, 5),
    lambda d: d["metadata"].update(owner="x"),
    lambda d: d["preorder"].update(elements=["pt", "pt"]),
], ids=["top-key", "version", "missing", "t-length", "range", "group-law", "bool", "non-subgroup",
        "duality-range", "meta-key", "dup-labels"])
def test_format_errors(mutate):
    d = _data()
    mutate(d)
    with pytest.raises(InstanceFormatError):
        instance_file.from_dict(d)


def test_axiom_violation_parses_but_fails_validation():
    d = _data("z6-two-normals")
    d["duality"] = [0, 0]
    inst = instance_file.from_dict(d)
    reports = {r.check: r for r in validate(inst)}
    assert not reports["duality"].ok


def test_not_json():
    with pytest.raises(InstanceFormatError):
        instance_file.loads("{")


def test_z6_two_normals_shape():
    inst = instances.build("z6-two-normals")
    assert [H.members for H in inst.presheaf] == [(0, 2, 4), (0, 3)]
    assert inst.duality == (1, 0)
    # H and K are incomparable under reverse inclusion
    assert inst.preorder.leq == ((True, False), (False, True))


def test_orbit_oracle_expected_check():
    reports = {r.check: r for r in instances.run_expected_checks("s3-orbit")}
    assert reports["orbit-oracle"].summary == {"pairs": 36, "matches": 36}
