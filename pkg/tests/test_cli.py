import json

import pytest

from pwenum.cli import (
    FIXTURES,
    catalog_ring,
    main,
    parse_code_spec,
    parse_enumerator_text,
    parse_poset_spec,
    parse_ring_spec,
    run_fuzz,
)
from pwenum.enumerators import level_enumerator
from pwenum.posets import chain, leveled


def test_parse_ring_spec():
    assert parse_ring_spec("F2").q == 2
    assert parse_ring_spec("F4").kind == "GF"
    assert parse_ring_spec("Z6").q == 6
    assert parse_ring_spec('{"kind":"Zm","m":4}').q == 4
    with pytest.raises(ValueError):
        parse_ring_spec("F5")


def test_parse_ring_spec_from_file(tmp_path):
    path = tmp_path / "ring.json"
    path.write_text(json.dumps({"kind": "F2u"}))
    assert parse_ring_spec(str(path)).kind == "F2u"


def test_parse_poset_spec():
    assert parse_poset_spec("chain3") == chain(3)
    assert parse_poset_spec("chain:3") == chain(3)
    assert parse_poset_spec("leveled:2,1,1") == leveled((2, 1, 1))
    assert parse_poset_spec('{"kind":"chain","n":3}') == chain(3)
    with pytest.raises(ValueError):
        parse_poset_spec("antichain:0")
    with pytest.raises(ValueError):
        parse_poset_spec("mystery:3")


def test_parse_code_spec():
    ring = catalog_ring("F2")
    code = parse_code_spec("C1", ring)
    assert code.size == 2
    inline = parse_code_spec('{"length":4,"generators":[[1,0,1,0],[0,1,1,1]]}', ring)
    assert inline.size == 4
    with pytest.raises(ValueError):
        parse_code_spec("no-such-code", ring)
    with pytest.raises(ValueError):
        parse_code_spec('{"length":4}', ring)


def test_parse_enumerator_text_roundtrip():
    for key, kind in (
        ("byte_code", "byte"),
        ("complete_dual", "complete"),
        ("plain_dual", "level"),
        ("chain_dual_1", "poset"),
    ):
        poly = parse_enumerator_text(FIXTURES[key], kind)
        assert parse_enumerator_text(poly.to_text(), kind) == poly
    with pytest.raises(ValueError):
        parse_enumerator_text("z_1 + ??", "level")


def test_enum_level_command(capsys):
    rc = main(["enum", "--kind", "level", "--ring", "F2", "--poset", "chain3", "--code", "C1"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "1 + z_3"


def test_enum_dual_and_transform_agree(capsys):
    base = ["enum", "--kind", "mspotty", "--t", "2,1,1", "--ring", "F2",
            "--poset", "leveled:2,1,1", "--code", "ex51", "--dual"]
    assert main(base) == 0
    direct = capsys.readouterr().out
    assert main(base + ["--via-transform"]) == 0
    assert capsys.readouterr().out == direct
    assert direct.strip() == "1 + z_1z_2 + z_1z_2z_3 + z_1z_3"


def test_enum_poset_kind(capsys):
    rc = main(["enum", "--kind", "poset", "--ring", "F2", "--poset", "chain3",
               "--code", "C2", "--dual"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "1 + x^2 + 2x^3"


def test_enum_json_output_is_deterministic(capsys):
    args = ["enum", "--kind", "complete", "--ring", "F2", "--poset", "leveled:2,1,1",
            "--code", "ex51", "--out", "json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    payload = json.loads(first)
    assert payload["kind"] == "complete"
    assert payload["enumerator"][0] == {
        "coeff": 1,
        "vars": [
            {"kind": "weight", "level": 1, "w": 0},
            {"kind": "weight", "level": 2, "w": 0},
            {"kind": "weight", "level": 3, "w": 0},
        ],
    }


def test_verify_command(capsys):
    rc = main(["verify", "--kind", "mspotty", "--t", "2,1,1", "--ring", "F2",
               "--poset", "leveled:2,1,1", "--code", "ex51"])
    assert rc == 0
    assert "EQUAL" in capsys.readouterr().out


def test_verify_json_report(capsys):
    rc = main(["verify", "--kind", "byte", "--ring", "F2",
               "--poset", "leveled:2,1,1", "--code", "ex51", "--out", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["equal"] is True
    assert payload["lhs"] == payload["rhs"]


def test_input_errors_exit_2(capsys):
    assert main(["enum", "--kind", "level", "--ring", "F2",
                 "--poset", "antichain:0", "--code", "C1"]) == 2
    assert main(["enum", "--kind", "level", "--ring", "F9x",
                 "--poset", "chain3", "--code", "C1"]) == 2
    assert main(["enum", "--kind", "mspotty", "--ring", "F2",
                 "--poset", "chain3", "--code", "C1"]) == 2  # missing --t
    assert main(["enum", "--kind", "byte", "--ring", "F2",
                 "--poset", "chain3", "--code", "C1", "--via-transform"]) == 2
    capsys.readouterr()


def test_cap_exit_3(capsys):
    assert main(["dual", "--ring", "F2", "--code", "C1", "--cap", "4"]) == 3
    capsys.readouterr()


def test_argparse_errors_exit_2(capsys):
    assert main(["enum", "--kind", "bogus", "--ring", "F2",
                 "--poset", "chain3", "--code", "C1"]) == 2
    capsys.readouterr()


def test_dual_command(capsys):
    rc = main(["dual", "--ring", "F2", "--code", "C1"])
    assert rc == 0
    assert capsys.readouterr().out.split() == ["000", "010", "100", "110"]
    rc = main(["dual", "--ring", "F2", "--code", "C1", "--out", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 4 and payload["length"] == 3


def test_paper_examples_command(capsys):
    rc = main(["paper-examples"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 16
    assert all(line.startswith("PASS") for line in lines)


def test_fuzz_command_deterministic(capsys):
    args = ["fuzz", "--fuzz-iters", "5", "--seed", "42", "--out", "json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    payload = json.loads(first)
    assert payload["count"] == 5 and not payload["failures"]


def test_run_fuzz_records():
    result = run_fuzz(8, seed=3)
    assert result["count"] == 8
    assert not result["failures"]
    for record in result["instances"]:
        assert record["ok"]
        assert record["duality"]
        for kind in ("byte", "complete", "level", "mspotty"):
            assert record[kind] is True


def test_cli_reuses_library_enumerators(capsys):
    # the CLI result must equal the library call bit for bit
    ring = catalog_ring("F2")
    code = parse_code_spec("c1", ring)
    levels = parse_poset_spec("chain3")
    from pwenum.posets import level_partition

    expected = level_enumerator(code, level_partition(levels)).to_text()
    main(["enum", "--kind", "level", "--ring", "F2", "--poset", "chain3", "--code", "c1"])
    assert capsys.readouterr().out.strip() == expected
