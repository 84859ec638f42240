"""Bootstrap helper that wraps ``pico_ioc.init()`` with rigidlab defaults.

``init()`` always prepends the ``rigidlab`` package to the module list, so
its components and configuration factory are registered even when the
caller only scans its own modules.
"""

import inspect
from importlib import import_module
from types import ModuleType
from typing import TYPE_CHECKING, Any, Iterable, List, Union

from pico_ioc import init as _ioc_init

if TYPE_CHECKING:
    from pico_ioc import PicoContainer

import rigidlab

_IOC_INIT_SIG = inspect.signature(_ioc_init)


def _to_module_list(modules: Union[Any, Iterable[Any]]) -> List[Any]:
    if modules is None:
        return []
    if isinstance(modules, Iterable) and not isinstance(modules, (str, bytes)):
        return list(modules)
    return [modules]


def _normalize_modules(raw: Iterable[Any]) -> List[ModuleType]:
    """Import strings, deduplicate by module name and keep first-seen order."""
    seen: set[str] = set()
    result: List[ModuleType] = []
    for item in raw:
        m = item if isinstance(item, ModuleType) else import_module(item)
        if m.__name__ not in seen:
            seen.add(m.__name__)
            result.append(m)
    return result


def init(*args: Any, **kwargs: Any) -> "PicoContainer":
    """Initialise a pico-ioc container with the rigidlab services.

    All arguments are forwarded to ``pico_ioc.init()``.

    Example:
        >>> from rigidlab import init, RigidityConfig, RigidityEngine
        >>> container = init(modules=[], overrides={RigidityConfig: RigidityConfig(seed=7)})
        >>> engine = container.get(RigidityEngine)
    """
    bound = _IOC_INIT_SIG.bind(*args, **kwargs)
    bound.apply_defaults()
    raw = _to_module_list(bound.arguments["modules"])
    bound.arguments["modules"] = _normalize_modules([rigidlab] + raw)
    return _ioc_init(*bound.args, **bound.kwargs)


init.__signature__ = _IOC_INIT_SIG
