import json
import random

import pytest

from symcube import cli
from symcube.expressions import CharMono
from symcube.parser import (
    BaseNode,
    Dual,
    ExtPower,
    FunctorialProduct,
    IsobaricSum,
    ParseError,
    SymPower,
    Twist,
    parse,
    parse_atom,
    print_ast,
)

# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _gen_mono(rng):
    gens = rng.sample(("w", "w'", "mu", "nu"), rng.randint(1, 2))
    return CharMono.from_dict({g: rng.choice((-4, -2, -1, 1, 2, 3)) for g in gens})


def _gen_node(rng, depth, forbid=()):
    opts = ["base"]
    if depth > 0:
        opts += ["sym", "ext", "dual", "twist"]
        if "sum" not in forbid:
            opts.append("sum")
        if "prod" not in forbid:
            opts.append("prod")
    kind = rng.choice(opts)
    if kind == "base":
        return BaseNode(rng.choice(("pi", "pi'", "1", "std")))
    if kind == "sym":
        return SymPower(rng.randint(0, 6), _gen_node(rng, depth - 1))
    if kind == "ext":
        return ExtPower(rng.randint(0, 3), _gen_node(rng, depth - 1))
    if kind == "dual":
        return Dual(_gen_node(rng, depth - 1))
    if kind == "twist":
        return Twist(_gen_node(rng, depth - 1), _gen_mono(rng))
    if kind == "sum":
        return IsobaricSum(
            tuple(_gen_node(rng, depth - 1, forbid=("sum",)) for _ in range(rng.randint(2, 3)))
        )
    return FunctorialProduct(
        tuple(_gen_node(rng, depth - 1, forbid=("prod",)) for _ in range(rng.randint(2, 3)))
    )


def test_parse_print_round_trip():
    rng = random.Random(424242)
    for _ in range(200):
        node = _gen_node(rng, rng.randint(1, 6))
        text = print_ast(node)
        assert parse(text) == node, text


@pytest.mark.parametrize(
    "text,canonical",
    [
        ("pi * sym^2(pi')", "pi*sym^2(pi')"),
        ("π⊠sym^2(π')⊗ω", "pi*sym^2(pi')@w"),
        ("sym^3(pi)⊞1@w^3", "sym^3(pi) + 1@w^3"),
        ("(pi@w)^∨", "dual(pi@w)"),
        ("sym^4(pi)@w^-3.mu", "sym^4(pi)@mu.w^-3"),
    ],
)
def test_surface_aliases(text, canonical):
    assert print_ast(parse(text)) == canonical


def test_parse_error_carries_byte_offset():
    with pytest.raises(ParseError) as exc:
        parse("sym^2(pi) + * pi")
    assert exc.value.offset == 12
    assert "sym^" in exc.value.expected
    # byte (not codepoint) offsets: the boxed-sum glyph is 3 bytes long
    with pytest.raises(ParseError) as exc:
        parse("pi⊞@")
    assert exc.value.offset == 5


def test_unknown_base_suggestions():
    with pytest.raises(ParseError, match="did you mean"):
        parse_atom("sym^2(pj)")
    with pytest.raises(ParseError, match="opaque"):
        parse_atom("sym^2(X)", (("X", 4),))
    atom = parse_atom("X@w", (("X", 4),))
    assert atom.factors[0].base == "X"


def test_parse_atom_shapes():
    atom = parse_atom("pi*sym^5(pi')@w.mu^2")
    assert len(atom.factors) == 2
    assert not atom.twist.is_trivial()
    with pytest.raises(ParseError):
        parse_atom("sym^2(pi) + pi")


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_cli_decompose(capsys):
    assert cli.main(["decompose", "ext^2(sym^3(pi))"]) == 0
    out = capsys.readouterr().out
    assert "1@w^3 + sym^4(pi)@w" in out


def test_cli_verify_discrepancy_still_exits_zero(capsys):
    assert cli.main(["verify", "eq-3.4"]) == 0
    out = capsys.readouterr().out
    assert "discrepancy" in out
    assert "28 against 36" in out


def test_cli_verify_all_json_is_byte_deterministic(capsys):
    assert cli.main(["--format", "json", "verify", "all"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["--format", "json", "verify", "all"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["command"] == "verify"
    assert doc["profile"] == "theoremA"
    assert doc["exit"] == 0
    assert [c["id"] for c in doc["checks"]] == [
        "eq-2.4", "dec-2.5", "lemma-2.1a", "lemma-2.1b", "lemma-2.2",
        "eq-3.1", "eq-3.2a", "eq-3.2b", "eq-3.3", "eq-3.4", "eq-3.5",
        "thm-A", "eq-4.1", "eq-4.2", "eq-4.3", "eq-4.4", "eq-4.5", "cor-B",
    ]
    for c in doc["checks"]:
        assert set(c) >= {"id", "status", "lhs", "rhs", "dim_lhs", "dim_rhs", "notes"}
        assert c["status"] in ("pass", "discrepancy")


def test_cli_parse_error_exit_2(capsys):
    assert cli.main(["decompose", "sym^2(pj)"]) == 2
    assert "did you mean" in capsys.readouterr().err


def test_cli_usage_error_exit_2(capsys):
    assert cli.main(["verify", "eq-9.9"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main(["local-factor", "pi", "--alpha", "2", "--beta", "1",
                     "--char", "nonsense"]) == 2
    capsys.readouterr()


def test_cli_missing_hypothesis_exit_1(capsys):
    assert cli.main(["--profile", "theoremA", "replay", "corollaryB"]) == 1
    out = capsys.readouterr().out
    assert "fail" in out


def test_cli_replay_corollary_defaults_to_its_profile(capsys):
    assert cli.main(["replay", "corollaryB"]) == 0
    out = capsys.readouterr().out
    assert "sym^7(pi)" in out


def test_cli_internal_error_exit_3(monkeypatch, capsys):
    monkeypatch.setattr(cli, "load_profile", lambda *_: (_ for _ in ()).throw(RuntimeError("boom")))
    assert cli.main(["decompose", "pi"]) == 3
    assert "internal error" in capsys.readouterr().err


def test_cli_poles(capsys):
    assert cli.main(["poles", "pi*sym^2(pi')", "sym^2(pi)*pi'"]) == 0
    out = capsys.readouterr().out
    assert "pairing: 1" in out


def test_cli_local_factor_json(capsys):
    assert cli.main([
        "--format", "json", "local-factor", "pi@mu",
        "--alpha", "1/2+1/2*sqrt5", "--beta", "1", "--char", "mu=3",
    ]) == 0
    doc = json.loads(capsys.readouterr().out)
    (check,) = doc["checks"]
    assert check["coefficients"][0] == {"a": "1", "b": "0"}
    assert check["coefficients"][1] == {"a": "-9/2", "b": "-3/2"}


def test_cli_icosa(capsys):
    assert cli.main(["icosa", "verify"]) == 0
    assert cli.main(["icosa", "fiber"]) == 0
    assert cli.main(["icosa", "table"]) == 0
    out = capsys.readouterr().out
    assert "order 10" in out


def test_cli_json_profile(tmp_path, capsys):
    doc = {
        "opaque": {},
        "standard_cuspidality": True,
        "cuspidal": ["pi*pi'"],
        "isomorphic": [["sym^3(pi)", "sym^3(pi')"]],
        "character_rewrites": {"w'": "w"},
        "analytic_axioms": [
            {"expr": "sym^6(pi)", "order": 0, "source": "test axiom"}
        ],
        "not_twist_equivalent": True,
    }
    path = tmp_path / "profile.json"
    path.write_text(json.dumps(doc))
    assert cli.main(["--profile", str(path), "decompose", "sym^3(pi')@w'"]) == 0
    out = capsys.readouterr().out
    assert "@w" in out
