import utils
from utils import format_duration, log, set_debug_mode


def test_format_duration():
    assert format_duration(-1) == "0s"
    assert format_duration(0.0125) == "12.5ms"
    assert format_duration(2.5) == "2.50s"
    assert format_duration(62.35) == "1m 2.35s"


def test_log_goes_to_stderr(capsys):
    log("INFO", "scan started")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "INFO" in captured.err and "scan started" in captured.err


def test_debug_is_gated(capsys):
    log("DEBUG", "hidden")
    assert capsys.readouterr().err == ""
    set_debug_mode(True)
    log("DEBUG", "shown")
    assert "shown" in capsys.readouterr().err


def test_debug_flag_read_from_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "config.json").write_text('{"debug_mode": true}')
    monkeypatch.setattr(utils, "_debug_mode", None)
    assert utils._get_debug_mode() is True
