import pytest

from fnlab.cli import dispatch, main
from fnlab.io.load import parse_mapping
from fnlab.order.poset import antichain

ENUMERATION3 = "fnmap k=inf\nmap a : a\nmap b : a b\nmap c : a b c\n"
ENUMERATION_PQR = "fnmap k=inf\nmap p : p\nmap q : p q\nmap r : p q r\n"
ENUMERATION_FIVE = "fnmap k=inf\n" + "".join(
    f"map x{ix} : {' '.join(f'x{k}' for k in range(ix + 1))}\n" for ix in range(5)
)
CROWN_FULL = "fnmap k=inf\n" + "".join(f"map {a} : a1 a2 b1 b2\n" for a in ("a1", "a2", "b1", "b2"))
FR1_MAP = "fnmap k=inf\nmap 0 : 0\nmap x0 : 0, x0\nmap !x0 : 0, !x0\nmap 1 : 0, x0, !x0, 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


@pytest.mark.quick
def test_verify(capsys, write):
    code, out, _ = run(capsys, "verify", "--poset", "builtin:chain3", "--map", str(write("f.map", ENUMERATION3)))
    assert code == 0 and out == ["pass"]

    singletons = write("s.map", "fnmap k=2\nmap a : a\nmap b : b\n")
    code, out, _ = run(capsys, "verify", "--poset", "builtin:chain2", "--map", str(singletons))
    assert code == 1 and out == ["counterexample: a b"]


@pytest.mark.quick
def test_format_errors(capsys, write):
    code, _, err = run(capsys, "verify", "--poset", str(write("bad.pos", "lattice\n")), "--map", "x")
    assert code == 2 and err.startswith("error:")

    code, _, _ = run(capsys, "verify", "--poset", "builtin:chain3", "--map", str(write("m.map", "fnmap k=inf\n")))
    assert code == 2

    code, _, _ = run(capsys, "verify", "--poset", "builtin:chain3", "--map", "missing-file.map")
    assert code == 2


@pytest.mark.quick
def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["verify", "--poset", "builtin:chain3"]) == 2
    assert main(["--help"]) == 0
    assert main(["intalg", "ops", "--order", "builtin:rationals", "-a", "[0,1)"]) == 2
    capsys.readouterr()


@pytest.mark.quick
def test_synth(capsys, tmp_path):
    target = tmp_path / "out" / "f.map"
    code, out, _ = run(capsys, "synth", "--poset", "builtin:antichain3", "--out", str(target))
    assert code == 0
    assert out[0] == "fnmap k=2"
    assert parse_mapping(antichain("a", "b", "c"), target.read_text())("b") == {"b"}

    code, out, _ = run(capsys, "synth", "--poset", "builtin:chain3", "--format", "tsv")
    assert code == 0 and out[0] == "element\tvalues\tsize"


@pytest.mark.quick
def test_witness(capsys, write):
    subset = str(write("a.sub", "a1 a2\n"))
    code, out, _ = run(capsys, "witness", "--poset", "builtin:crown", "--subset", subset, "-k", "2")
    assert code == 1 and out == ["refutation: b1 lower 2"]

    code, out, _ = run(capsys, "witness", "--poset", "builtin:crown", "--subset", subset, "-k", "3")
    assert code == 0 and "wit b1 U: a1 a2 V:" in out

    code, out, _ = run(capsys, "witness", "--poset", "builtin:fr2", "--subset", str(write("x.sub", "x0\n")), "-k", "2")
    assert code == 1 and out == ["refutation: - closure 1"]


@pytest.mark.quick
def test_transfer_restrict(capsys, write):
    full = write("full.map", "fnmap k=inf\nmap a : a b c\nmap b : a b c\nmap c : a b c\n")
    argv = ["transfer", "restrict", "--poset", "builtin:chain3", "--subset", str(write("s.sub", "a c")), "--map"]
    code, out, _ = run(capsys, *argv, str(full), "--check")
    assert code == 0
    assert out == ["fnmap k=inf", "map a : a c", "map c : a c", "pass"]

    code, _, _ = run(capsys, "transfer", "restrict", "--poset", "builtin:chain3", "--map", str(full))
    assert code == 2


@pytest.mark.quick
def test_transfer_quotient_needs_algebra(capsys, write):
    code, _, _ = run(
        capsys,
        "transfer",
        "quotient-lift",
        "--poset",
        "builtin:chain3",
        "--ideal",
        str(write("i.sub", "a")),
        "--map",
        str(write("f.map", ENUMERATION3)),
    )
    assert code == 2


@pytest.mark.quick
def test_intalg(capsys, write):
    rationals = ["--order", "builtin:rationals"]
    code, out, _ = run(capsys, "intalg", "ops", *rationals, "--op", "union", "-a", "[0,1)", "-b", "[1,2)")
    assert code == 0 and out == ["[0,2)"]

    code, out, _ = run(capsys, "intalg", "ops", *rationals, "--op", "complement", "-a", "[0,1)")
    assert out == ["[-inf,0) [1,+inf)"]

    code, out, _ = run(capsys, "intalg", "ops", *rationals, "--op", "leq", "-a", "[0,2)", "-b", "[0,1)")
    assert code == 1 and out == ["false"]

    code, out, _ = run(capsys, "intalg", "ep", *rationals, "-a", "[0,1) [2,3)")
    assert out == ["0 1 2 3"]

    code, _, _ = run(capsys, "intalg", "ops", *rationals, "--op", "union", "-a", "[0,1)")
    assert code == 2

    three = ["--order", "builtin:three"]
    code, out, _ = run(capsys, "intalg", "dense-map", *three, "--skeleton", "p q r")
    assert code == 0 and out == ["pass"]

    enumeration = str(write("f.map", ENUMERATION_PQR))
    code, out, _ = run(capsys, "intalg", "lift", *three, "--map", enumeration)
    assert code == 0 and out == ["pass"]

    code, out, _ = run(capsys, "intalg", "project", *three, "--map", enumeration)
    assert code == 0 and out[0] == "fnmap k=inf" and out[-1] == "pass"


@pytest.mark.quick
def test_game(capsys, write):
    argv = ["game", "--poset", "builtin:chain3", "--rounds", "2", "--move-bound", "4", "-k", "2"]
    code, out, _ = run(capsys, *argv, "--map", str(write("f.map", ENUMERATION3)))
    assert code == 0
    assert out[:4] == ["I: a", "II: a", "I: a b", "II: a b"]
    assert "verdict: win" in out

    code, out, _ = run(capsys, *argv, "--second", "pass")
    assert code == 0

    crown = ["game", "--poset", "builtin:crown", "--rounds", "2", "--move-bound", "3", "-k", "2"]
    code, out, _ = run(capsys, *crown, "--second", "pass")
    assert code == 1 and out[-1] == "refutation: b1 lower 2"


@pytest.mark.quick
def test_game_bad_seed(capsys, monkeypatch):
    monkeypatch.setenv("FNLAB_SEED", "abc")
    argv = ["game", "--poset", "builtin:chain3", "--rounds", "1", "--move-bound", "3", "-k", "2"]
    code, _, err = run(capsys, *argv, "--first", "random", "--second", "pass")
    assert code == 2 and "FNLAB_SEED" in err


@pytest.mark.quick
def test_engelking(capsys):
    code, out, _ = run(capsys, "engelking", "member", "--m", "5", "--expr", "x0")
    assert code == 1
    assert out == ["member: false", "refutation: x0 constants-disagree"]

    code, out, _ = run(capsys, "engelking", "member", "--m", "5", "--expr", "x0 | x1 | !x2")
    assert code == 0 and out == ["member: true"]

    check = ["engelking", "witness-check", "--m", "8", "--ys", "0,1,2,3", "--y-sub", "1"]
    code, out, _ = run(capsys, *check, "--x0", "0", "--x1", "4", "--x2", "5", "--y1", "2", "--y2", "3")
    assert code == 0 and out[0] == "b-in-B: pass"

    code, _, _ = run(capsys, *check, "--x0", "0", "--x2", "5", "--y1", "2", "--y2", "3")
    assert code == 2

    code, _, _ = run(capsys, *check, "--x0", "4", "--x1", "4", "--x2", "5", "--y1", "2", "--y2", "3")
    assert code == 2


@pytest.mark.quick
def test_independent(capsys):
    argv = ["independent", "--algebra", "builtin:fr2", "--map", "interpolation:n=2", "--elements"]
    code, out, _ = run(capsys, *argv, "x0, x1")
    assert code == 0
    assert out[-2:] == ["family: x0; x1", "oracle: pass"]

    code, out, _ = run(capsys, *argv, "0, 1")
    assert code == 1 and out == ["refutation: empty"]


@pytest.mark.quick
def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "enumeration", "--param", "n=3,4", "--repeats", "2", "--seed", "1")
    assert code == 0 and out == ["4 of 4 instances passed"]

    code, out, _ = run(capsys, "sweep", "intalg-laws", "--repeats", "2", "--format", "tsv")
    assert code == 0 and out[0].split("\t")[:3] == ["params", "n", "repeat"]


@pytest.mark.quick
def test_dispatch_matches_main(capsys):
    assert dispatch(("engelking", "member", "--m", "5", "--expr", "1")) == 0
    assert capsys.readouterr().out.splitlines() == ["member: true"]



@pytest.mark.quick
def test_transfer_extend(capsys, write):
    argv = ["transfer", "extend", "--poset", "builtin:chain3", "--subset", str(write("s.sub", "a c"))]
    argv += ["--map", str(write("g.map", ENUMERATION3)), "--check", "--sub-map"]
    code, out, _ = run(capsys, *argv, str(write("f.map", "fnmap k=inf\nmap a : a\nmap c : a c\n")))
    assert code == 0
    assert out == ["fnmap k=inf", "map a : a", "map b : a b c", "map c : a c", "pass"]

    code, _, err = run(capsys, *argv, str(write("bad.map", "fnmap k=inf\nmap a : a\nmap c : c\n")))
    assert code == 2 and "interpolation" in err


@pytest.mark.quick
def test_transfer_retract(capsys, write):
    argv = ["transfer", "retract", "--poset", "builtin:chain3", "--map", str(write("g.map", ENUMERATION3))]
    argv += ["--sub", str(write("ac.pos", "poset\nelem a\nelem c\nle a c\n"))]
    argv += ["--embed", str(write("i.om", "ordermap\nsend a -> a\nsend c -> c\n"))]
    code, out, _ = run(capsys, *argv, "--check")
    assert code == 0
    assert out == ["fnmap k=inf", "map a : a", "map c : a c", "pass"]

    upward = write("j.om", "ordermap\nsend a -> a\nsend b -> c\nsend c -> c\n")
    code, out, _ = run(capsys, *argv, "--retraction", str(upward), "--check")
    assert code == 0 and out[-1] == "pass"

    backwards = write("k.om", "ordermap\nsend a -> c\nsend b -> a\nsend c -> a\n")
    code, _, _ = run(capsys, *argv, "--retraction", str(backwards))
    assert code == 2

    crown = ["transfer", "retract", "--poset", "builtin:crown", "--map", str(write("full.map", CROWN_FULL))]
    crown += ["--sub", str(write("corners.pos", "poset\nelem a1\nelem a2\n"))]
    code, _, err = run(capsys, *crown, "--embed", str(write("e.om", "ordermap\nsend a1 -> a1\nsend a2 -> a2\n")))
    assert code == 2 and "chain" in err


@pytest.mark.quick
def test_transfer_chain(capsys, write):
    subsets = [str(write("a.sub", "a")), str(write("ac.sub", "a c"))]
    maps = [
        str(write("a.map", "fnmap k=inf\nmap a : a\n")),
        str(write("ac.map", "fnmap k=inf\nmap a : a\nmap c : a c\n")),
    ]
    argv = ["transfer", "chain", "--poset", "builtin:chain3"]
    code, out, _ = run(capsys, *argv, "--subsets", *subsets, "--maps", *maps, "--check")
    assert code == 0
    assert out == ["fnmap k=inf", "map a : a", "map c : a c", "pass"]

    code, _, _ = run(capsys, *argv, "--subsets", *subsets, "--maps", maps[1])
    assert code == 2

    code, _, _ = run(capsys, *argv, "--subsets", *subsets[::-1], "--maps", *maps)
    assert code == 2


@pytest.mark.quick
def test_transfer_quotient_push(capsys, write):
    argv = ["transfer", "quotient-push", "--poset", "builtin:fr1", "--map", str(write("g.map", FR1_MAP))]
    code, out, _ = run(capsys, *argv, "--ideal", str(write("i.sub", "0, x0\n")), "--check")
    assert code == 0
    assert out == ["fnmap k=inf", "map 0 : 0", "map !x0 : 0, !x0", "pass"]

    code, _, _ = run(capsys, *argv, "--ideal", str(write("j.sub", "x0, !x0\n")))
    assert code == 2


@pytest.mark.quick
def test_transfer_quotient_lift(capsys, write):
    argv = ["transfer", "quotient-lift", "--poset", "builtin:fr1", "--ideal", str(write("i.sub", "0, x0\n"))]
    lifted = write("f.map", "fnmap k=inf\nmap 0 : 0\nmap !x0 : 0, !x0\n")
    code, out, _ = run(capsys, *argv, "--map", str(lifted), "--check")
    assert code == 0
    assert out == [
        "fnmap k=inf",
        "map 0 : 0, x0",
        "map !x0 : 0, !x0, x0, 1",
        "map x0 : 0, x0",
        "map 1 : 0, !x0, x0, 1",
        "pass",
    ]

    # x0 is not a member of the quotient
    code, _, _ = run(capsys, *argv, "--map", str(write("g.map", FR1_MAP)))
    assert code == 2


@pytest.mark.quick
def test_intalg_dense_map(capsys):
    argv = ["intalg", "dense-map", "--order", "builtin:rationals", "--skeleton", "0 1 2"]
    code, out, _ = run(capsys, *argv, "--grid", "0 1 2")
    assert code == 0 and out == ["pass"]

    code, _, err = run(capsys, *argv)
    assert code == 2 and "grid" in err


@pytest.mark.quick
def test_intalg_lift(capsys, write):
    argv = ["intalg", "lift", "--order", "builtin:five", "--map"]
    code, out, _ = run(capsys, *argv, str(write("f.map", ENUMERATION_FIVE)))
    assert code == 0 and out == ["pass"]

    singletons = "fnmap k=inf\n" + "".join(f"map x{ix} : x{ix}\n" for ix in range(5))
    code, _, err = run(capsys, *argv, str(write("s.map", singletons)))
    assert code == 2 and "interpolation" in err

    rationals = ["intalg", "lift", "--order", "builtin:rationals", "--grid", "0 1"]
    code, _, _ = run(capsys, *rationals, "--map", str(write("q.map", ENUMERATION_PQR)))
    assert code == 2


@pytest.mark.quick
def test_intalg_project(capsys, write):
    argv = ["intalg", "project", "--order", "builtin:five", "--map", str(write("f.map", ENUMERATION_FIVE))]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out[0] == "fnmap k=inf"
    assert [line.split(" :")[0] for line in out[1:-1]] == [f"map x{ix}" for ix in range(5)]
    assert out[-1] == "pass"


@pytest.mark.quick
def test_game_tsv_verdict(capsys, write):
    argv = ["game", "--poset", "builtin:chain3", "--rounds", "2", "--move-bound", "4", "-k", "2", "--format", "tsv"]
    code, out, _ = run(capsys, *argv, "--map", str(write("f.map", ENUMERATION3)))
    assert code == 0
    assert out[0].split("\t") == ["round", "player", "size", "set"]
    assert out[-1] == "verdict: win"

    crown = ["game", "--poset", "builtin:crown", "--rounds", "2", "--move-bound", "3", "-k", "2", "--format", "tsv"]
    code, out, _ = run(capsys, *crown, "--second", "pass")
    assert code == 1 and out[-2:] == ["verdict: lose", "refutation: b1 lower 2"]


@pytest.mark.quick
@pytest.mark.parametrize(
    "argv",
    [
        ["synth", "--poset", "builtin:crown"],
        ["witness", "--poset", "builtin:crown", "-k", "3", "--subset", "a1 a2"],
        ["sweep", "enumeration", "--param", "n=3,5", "--repeats", "3", "--seed", "7"],
        ["game", "--poset", "builtin:crown", "--rounds", "3", "--move-bound", "3", "-k", "3", "--first", "random"],
    ],
)
def test_tsv_output_is_repeatable(capsys, write, argv):
    argv = [str(write("a.sub", arg)) if prev == "--subset" else arg for prev, arg in zip([None, *argv], argv)]
    argv += ["--second", "pass", "--seed", "4"] if argv[0] == "game" else []
    runs = [run(capsys, *argv, "--format", "tsv") for _ in range(2)]
    assert runs[0][1] and runs[0] == runs[1]


@pytest.mark.quick
@pytest.mark.parametrize(
    "argv",
    [
        ["engelking", "member", "--m", "30", "--expr", "x29"],
        ["engelking", "witness-check", "--m", "40", "--ys", "0,1,2", "--x0", "0", "--x1", "38", "--x2", "39"]
        + ["--y1", "1", "--y2", "2"],
        ["game", "--poset", "builtin:chain3", "--rounds", "0", "--move-bound", "3", "-k", "2"],
        ["game", "--poset", "builtin:chain3", "--rounds", "1", "--move-bound", "1", "-k", "2"],
        ["sweep", "enumeration", "--param", "n=3,4", "--param", "density=0.2", "--repeats", "2"],
        ["sweep", "enumeration", "--repeats", "0"],
        ["sweep", "enumeration", "--param", "density=1.5"],
        ["sweep", "enumeration", "--param", "n=x"],
        ["sweep", "enumeration", "--param", "n=2.5"],
    ],
)
def test_out_of_range_arguments(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err
