"""Global registry of self-validation checks."""

from collections.abc import Callable

from pydantic import BaseModel, ConfigDict, Field

type CheckFunction = Callable[[], None]


class RegisteredCheck(BaseModel):
    """A named check and the quantity or formula it exercises."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(description="Unique check name")
    quantity: str = Field(description="Quantity or formula under test, printed on failure")
    func: CheckFunction = Field(description="Callable raising on failure")


class CheckRegistry:
    """Global registry of validation checks, kept in registration order."""

    _registry: dict[str, RegisteredCheck] = {}

    @classmethod
    def register(cls, name: str, quantity: str) -> Callable[[CheckFunction], CheckFunction]:
        """Decorator to register a check function under ``name``."""

        def decorator(func: CheckFunction) -> CheckFunction:
            cls.register_function(name, quantity, func)
            return func

        return decorator

    @classmethod
    def register_function(cls, name: str, quantity: str, func: CheckFunction) -> None:
        """Imperatively register a check function."""
        if name in cls._registry:
            raise ValueError(f"Check '{name}' already registered")
        cls._registry[name] = RegisteredCheck(name=name, quantity=quantity, func=func)

    @classmethod
    def get(cls, name: str) -> RegisteredCheck:
        """Retrieve a registered check."""
        if name not in cls._registry:
            raise KeyError(f"Check '{name}' not found in registry")
        return cls._registry[name]

    @classmethod
    def checks(cls) -> list[RegisteredCheck]:
        """Registered checks in registration order."""
        return list(cls._registry.values())

    @classmethod
    def list_all(cls) -> list[str]:
        """List all registered check names."""
        return sorted(cls._registry.keys())

    @classmethod
    def clear(cls) -> None:
        """Clear all registered checks (useful for testing)."""
        cls._registry.clear()
