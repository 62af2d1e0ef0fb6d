"""Tests for the input schema, report determinism, and the exit-code contract."""

import json

import pytest

from dubois.cli import main
from dubois.report import (
    SchemaError,
    parse_spec,
    parse_spec_toml,
    render_json,
    render_text,
    run,
    spec_from_mapping,
    spec_to_mapping,
)

QUADRIC = '{"kind":"toric","ambient_rank":3,"rays":[[0,0,1],[1,0,1],[0,1,1],[1,1,1]]}'
VERONESE = '{"kind":"cone","base":"projective_space","r":3,"d":2,"k_max":3}'
K3 = '{"kind":"cone","base":"hypersurface_surface","degree":4,"twist":1,"k_max":1}'
BOUNDARY = '{"kind":"toric","ambient_rank":3,"rays":[[1,0,0],[0,1,0],[1,1,2]]}'


# --- parsing ------------------------------------------------------------------

def test_parse_toric_example():
    spec = parse_spec(QUADRIC)
    assert spec.kind == "toric"
    assert spec.ambient_rank == 3
    assert spec.rays == ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1))


def test_parse_cone_example():
    spec = parse_spec(VERONESE)
    assert spec.kind == "cone" and spec.base == "projective_space"
    assert (spec.r, spec.d, spec.k_max) == (3, 2, 3)


def test_parse_rejects_nonpositive_twist():
    with pytest.raises(SchemaError) as err:
        parse_spec('{"kind":"cone","base":"hypersurface_surface","degree":4,"twist":0}')
    assert err.value.path == "twist"
    assert ">= 1" in err.value.reason


@pytest.mark.parametrize(
    "text, path",
    [
        ("[1,2]", "$"),
        ('{"kind":"torus"}', "kind"),
        ('{"kind":"toric","rays":[[1,0]]}', "ambient_rank"),
        ('{"kind":"toric","ambient_rank":2,"rays":[[1,0],[1]]}', "rays[1]"),
        ('{"kind":"toric","ambient_rank":2,"rays":[[1,0.5],[0,1]]}', "rays[0][1]"),
        ('{"kind":"toric","ambient_rank":2,"rays":[[1,0]],"spin":1}', "spin"),
        ('{"kind":"cone","base":"abelian","r":1,"d":1}', "base"),
        ('{"kind":"cone","base":"projective_space","r":2,"d":1,"k_max":4}', "k_max"),
        ('{"kind":"cone","base":"projective_space","r":true,"d":1}', "r"),
        ("{not json", "$"),
    ],
)
def test_schema_errors(text, path):
    with pytest.raises(SchemaError) as err:
        parse_spec(text)
    assert err.value.path == path


def test_round_trip():
    for text in (QUADRIC, VERONESE, K3, BOUNDARY):
        spec = parse_spec(text)
        again = spec_from_mapping(spec_to_mapping(spec))
        assert again == spec


def test_toml_input_matches_json():
    toml_text = "\n".join(
        [
            'kind = "cone"',
            'base = "hypersurface_surface"',
            "degree = 4",
            "twist = 1",
            "k_max = 1",
        ]
    )
    assert parse_spec_toml(toml_text) == parse_spec(K3)
    with pytest.raises(SchemaError):
        parse_spec_toml("kind = [")


# --- report content -----------------------------------------------------------

def test_quadric_report_content():
    doc = run(parse_spec(QUADRIC))
    toric = doc["toric"]
    assert toric["is_simplicial"] is False
    assert toric["singular_locus_codim"] == 3
    assert toric["maxima"]["k_du_bois"] == 1
    assert toric["maxima"]["pre_k_du_bois"] == "infinity"
    assert toric["verdicts"]["pre_k_rational"][1]["status"] == "no"
    assert doc["unknown_verdicts"] == 0


def test_veronese_report_content():
    doc = run(parse_spec('{"kind":"cone","base":"projective_space","r":2,"d":3,"k_max":2}'))
    cone = doc["cone"]
    assert cone["maxima"]["k_du_bois"] == 1
    assert cone["maxima"]["k_rational"] == 0
    assert cone["consistency_failures"] == []


def test_k3_report_witness():
    doc = run(parse_spec(K3))
    row = doc["cone"]["verdicts"]["pre_k_du_bois"][1]
    assert row["status"] == "no"
    assert row["witness"] == {"p": 1, "i": 1, "m": 1, "dim": {"lo": 16, "hi": 20}}
    # at twist 4 the witness value collapses to an exact 1
    doc4 = run(parse_spec('{"kind":"cone","base":"hypersurface_surface","degree":4,"twist":4,"k_max":1}'))
    row4 = doc4["cone"]["verdicts"]["pre_k_du_bois"][1]
    assert row4["witness"] == {"p": 1, "i": 1, "m": 1, "dim": 1}


def test_report_determinism():
    for text in (QUADRIC, VERONESE, K3, BOUNDARY):
        first = render_json(run(parse_spec(text)))
        second = render_json(run(parse_spec(text)))
        assert first == second


def test_text_report_tail_marker():
    text = render_text(run(parse_spec(K3)))
    assert "⋯ 0 (certified)" in text
    assert "16..20" in text


# --- CLI exit codes -----------------------------------------------------------

def write(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return str(path)


def test_exit_code_zero(tmp_path, capsys):
    code = main(["--input", write(tmp_path, "quadric.json", QUADRIC)])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["toric"]["maxima"]["k_du_bois"] == 1


def test_exit_code_three_on_unknown(tmp_path, capsys):
    code = main(["--input", write(tmp_path, "boundary.json", BOUNDARY)])
    doc = json.loads(capsys.readouterr().out)
    assert code == 3
    assert doc["unknown_verdicts"] == 1
    statuses = [row["status"] for row in doc["toric"]["verdicts"]["k_rational"]]
    assert statuses[:3] == ["yes", "unknown", "no"]


def test_exit_code_two_on_schema_error(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", '{"kind":"cone","base":"hypersurface_surface","degree":4,"twist":0}')
    code = main(["--input", bad])
    err = capsys.readouterr().err
    assert code == 2
    assert "twist" in err


def test_exit_code_two_on_invalid_cone(tmp_path, capsys):
    bad = write(tmp_path, "line.json", '{"kind":"toric","ambient_rank":2,"rays":[[1,0],[-1,0]]}')
    assert main(["--input", bad]) == 2
    assert "line" in capsys.readouterr().err


def test_exit_code_two_on_missing_file(capsys):
    assert main(["--input", "/nonexistent/nowhere.json"]) == 2
    capsys.readouterr()


def test_exit_code_two_without_input(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_cli_text_format(tmp_path, capsys):
    code = main(["--input", write(tmp_path, "k3.json", K3), "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "affine cone over smooth degree-4 surface" in out


def test_cli_overrides(tmp_path, capsys):
    path = write(tmp_path, "v.json", '{"kind":"cone","base":"projective_space","r":2,"d":3}')
    code = main(["--input", path, "--k-max", "1", "--m-max", "2"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["cone"]["k_max"] == 1
    assert len(doc["cone"]["graded_tables"][1]["entries"]) == 2
    assert main(["--input", path, "--k-max", "9"]) == 2
    capsys.readouterr()


def test_cli_toml_input(tmp_path, capsys):
    toml_text = 'kind = "toric"\nambient_rank = 2\nrays = [[1, 0], [1, 2]]\n'
    code = main(["--input", write(tmp_path, "a1.toml", toml_text)])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["toric"]["singular_locus_codim"] == 2


def test_cli_self_check(capsys):
    assert main(["--self-check"]) == 0
    out = capsys.readouterr().out
    assert "self-check passed" in out
    assert out.count("[  ok]") == 5


def test_cli_toric_k_max_cap(tmp_path, capsys):
    path = write(tmp_path, "q.json", QUADRIC)
    assert main(["--input", path, "--k-max", "64"]) == 0
    capsys.readouterr()
    assert main(["--input", path, "--k-max", "65"]) == 2
    capsys.readouterr()
