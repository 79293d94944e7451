import pytest

from torussum.cli import main


def _argv(command, out, **flags):
    argv = [command, "--out", str(out)]
    for key, val in flags.items():
        argv += [f"--{key}", str(val)]
    return argv


def test_identities_subcommand(tmp_path, capsys):
    code = main(_argv("identities", tmp_path, grid=32, degrees="2,4", seed=7))
    captured = capsys.readouterr()
    assert code == 0
    assert (tmp_path / "identities.csv").exists()
    assert "identity residuals at or below 1e-09" in captured.out
    assert captured.err == ""


def test_identities_exit_nonzero_on_error_rows(tmp_path, capsys):
    code = main(_argv("identities", tmp_path, grid=16, degrees="2,8", seed=7))
    captured = capsys.readouterr()
    assert code == 1
    assert "error:" in captured.err
    # at most ten error lines are echoed, the rest is summarized
    error_lines = [l for l in captured.err.splitlines() if l.startswith("error:")]
    assert len(error_lines) <= 10
    assert "more error rows" in captured.err


def test_bound_sweep_subcommand(tmp_path, capsys):
    code = main(
        _argv("bound-sweep", tmp_path, grid=64, degrees="2,4", p="0.5", funcs="cos_x", seed=7)
    )
    assert code == 0
    assert (tmp_path / "bound_sweep.csv").exists()
    assert "wrote" in capsys.readouterr().out


def test_converge_sweep_with_plots(tmp_path):
    code = main(
        _argv(
            "converge-sweep", tmp_path,
            grid=64, degrees="2,4", p="0.5", epsilon="0.2", funcs="cos_x", seed=7,
        )
        + ["--format", "csv+plots"]
    )
    assert code == 0
    assert (tmp_path / "converge_sweep.csv").exists()
    plots = list((tmp_path / "plots").glob("*.svg"))
    assert plots


def test_kernels_dump_subcommand(tmp_path):
    code = main(_argv("kernels-dump", tmp_path, grid=16, degrees="1,2"))
    assert code == 0
    lines = (tmp_path / "kernels.csv").read_text().splitlines()
    assert lines[1] == "kernel,order,u,value"


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("grid = 16\ndegrees = 1,2\nfuncs = cos_x\n")
    out = tmp_path / "out"
    # the explicit --grid beats the file value
    code = main(
        ["kernels-dump", "--config", str(cfg), "--grid", "32", "--out", str(out)]
    )
    assert code == 0
    text = (out / "kernels.csv").read_text()
    assert len(text.splitlines()) == 2 + 3 * 2 * 32


def test_invalid_values_exit_two(tmp_path, capsys):
    code = main(_argv("identities", tmp_path, grid=7))
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.startswith("torussum:")

    code = main(_argv("bound-sweep", tmp_path, grid=32, degrees="2", p="1.0"))
    assert code == 2

    code = main(_argv("bound-sweep", tmp_path, grid=32, degrees="2", funcs="ghost"))
    assert code == 2


def test_missing_subcommand_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    capsys.readouterr()


def test_cli_runs_are_byte_reproducible(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert main(_argv("identities", out, grid=32, degrees="2,4", seed=9)) == 0
    assert (a / "identities.csv").read_bytes() == (b / "identities.csv").read_bytes()
