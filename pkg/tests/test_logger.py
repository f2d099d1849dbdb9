from __future__ import annotations

import logging

from rich.logging import RichHandler

from kahlerbochner.logger import kahlerbochner_log


def test_kahlerbochner_log_default_name():
    assert kahlerbochner_log().name == "kahlerbochner"
    assert kahlerbochner_log("kahlerbochner").name == "kahlerbochner"


def test_kahlerbochner_log_children():
    assert kahlerbochner_log("kahlerbochner.verify").name == "kahlerbochner.verify"
    assert kahlerbochner_log("report").name == "kahlerbochner.report"


def test_kahlerbochner_log_single_handler():
    kahlerbochner_log()
    kahlerbochner_log("verify")
    handlers = logging.getLogger("kahlerbochner").handlers
    assert sum(isinstance(h, RichHandler) for h in handlers) == 1
    assert not any(isinstance(h, RichHandler) for h in logging.getLogger().handlers)


def test_kahlerbochner_log_propagates(caplog):
    with caplog.at_level("INFO", logger="kahlerbochner"):
        kahlerbochner_log("verify").info("spectrum computed")
    assert "spectrum computed" in caplog.text
