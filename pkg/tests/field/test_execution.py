"""Tests for execution-policy helpers."""

import pytest

from devils_coliseum.field import execution


@pytest.mark.parametrize("policy", ["serial", "threads", "processes"])
def test_executor_override(monkeypatch, policy: str) -> None:
    monkeypatch.setenv(execution.EXECUTOR_ENV, policy.upper())
    assert execution.executor_policy() == policy


def test_executor_auto_policy(monkeypatch) -> None:
    monkeypatch.delenv(execution.EXECUTOR_ENV, raising=False)

    monkeypatch.setattr(execution, "free_threaded", lambda: False)
    assert execution.executor_policy() == "processes"

    monkeypatch.setattr(execution, "free_threaded", lambda: True)
    assert execution.executor_policy() == "threads"


def test_unknown_executor_falls_back_to_auto(monkeypatch, caplog) -> None:
    monkeypatch.setenv(execution.EXECUTOR_ENV, "fibers")
    monkeypatch.setattr(execution, "free_threaded", lambda: True)
    assert execution.executor_policy() == "threads"
    assert "fibers" in caplog.text


def test_resolve_workers_prefers_explicit_then_env(monkeypatch) -> None:
    monkeypatch.setenv(execution.WORKERS_ENV, "3")
    assert execution.resolve_workers(5) == 5
    assert execution.resolve_workers() == 3

    monkeypatch.setenv(execution.WORKERS_ENV, "0")
    assert execution.resolve_workers() == 1

    monkeypatch.setenv(execution.WORKERS_ENV, "many")
    assert execution.resolve_workers() is None

    monkeypatch.delenv(execution.WORKERS_ENV)
    assert execution.resolve_workers() is None


def test_map_chunks_preserves_order(monkeypatch) -> None:
    monkeypatch.setenv(execution.EXECUTOR_ENV, "threads")
    assert list(execution.map_chunks(lambda x: x * x, range(10), workers=3)) == [x * x for x in range(10)]

    monkeypatch.setenv(execution.EXECUTOR_ENV, "serial")
    assert list(execution.map_chunks(str, [1, 2], workers=4)) == ["1", "2"]
