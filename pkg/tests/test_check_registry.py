"""Tests for CheckRegistry functionality."""

from collections.abc import Iterator

import pytest

from relaylink.cli.registry import CheckRegistry, RegisteredCheck


@pytest.fixture(autouse=True)
def empty_registry(registry_snapshot: None) -> Iterator[None]:
    """Start each test from an empty registry; the snapshot restores the built-in suite."""
    CheckRegistry.clear()
    yield


def test_register_decorator() -> None:
    """Test registering a check using the decorator."""

    @CheckRegistry.register("always_holds", "a tautology")
    def always_holds() -> None:
        return None

    assert "always_holds" in CheckRegistry.list_all()
    check = CheckRegistry.get("always_holds")
    assert isinstance(check, RegisteredCheck)
    assert check.quantity == "a tautology"
    assert check.func is always_holds


def test_register_function_imperative() -> None:
    """Test registering a check imperatively."""

    def my_check() -> None:
        return None

    CheckRegistry.register_function("my_check", "P_x", my_check)
    assert CheckRegistry.get("my_check").func is my_check


def test_duplicate_registration_decorator() -> None:
    """Test that duplicate registration raises ValueError."""

    @CheckRegistry.register("dup_check", "first")
    def first() -> None:
        return None

    with pytest.raises(ValueError, match="Check 'dup_check' already registered"):

        @CheckRegistry.register("dup_check", "second")
        def second() -> None:
            return None


def test_get_missing_check() -> None:
    """Test that an unknown name raises KeyError."""
    with pytest.raises(KeyError, match="Check 'nope' not found in registry"):
        CheckRegistry.get("nope")


def test_checks_keep_registration_order() -> None:
    """checks() follows registration order while list_all() is sorted."""
    for name in ("zeta", "alpha", "mu"):
        CheckRegistry.register_function(name, name, lambda: None)

    assert [c.name for c in CheckRegistry.checks()] == ["zeta", "alpha", "mu"]
    assert CheckRegistry.list_all() == ["alpha", "mu", "zeta"]


def test_clear() -> None:
    """Test clearing the registry."""
    CheckRegistry.register_function("temporary", "t", lambda: None)
    CheckRegistry.clear()
    assert CheckRegistry.list_all() == []
