"""Registry of constructor-expression terms.

``ConstructorRegistry`` stores the adapters declared with
``@graph_constructor``.  On container start-up its ``@configure`` hook scans
``rigidlab.expressions`` (and any extra modules passed to ``scan_module``) so
new terms only need the decorator.
"""

import inspect
from importlib import import_module
from types import ModuleType
from typing import Callable, Dict, List, Optional, Set, Tuple, Union

from pico_ioc import component, configure

from .decorators import CONSTRUCTOR_META_KEY, ConstructorConfig
from .logging import get_logger

logger = get_logger(__name__)

BUILTIN_MODULE = "rigidlab.expressions"


@component(scope="singleton")
class ConstructorRegistry:
    """Maps grammar keywords to their adapter and ``ConstructorConfig``."""

    def __init__(self):
        self._terms: Dict[str, Tuple[Callable, ConstructorConfig]] = {}
        self._scanned_modules: Set[str] = set()

    @configure
    def scan_builtins(self):
        """Register the built-in terms.  Called by pico-ioc on start-up."""
        self.scan_module(BUILTIN_MODULE)

    def register(self, fn: Callable, config: Optional[ConstructorConfig] = None) -> None:
        config = config or getattr(fn, CONSTRUCTOR_META_KEY)
        if config.name in self._terms and self._terms[config.name][0] is not fn:
            logger.warning("Constructor term '%s' redefined by %s", config.name, fn.__qualname__)
        self._terms[config.name] = (fn, config)

    def scan_module(self, module: Union[str, ModuleType]) -> None:
        """Register every decorated function of *module* (scanned at most once)."""
        if isinstance(module, str):
            module = import_module(module)
        if module.__name__ in self._scanned_modules:
            return
        self._scanned_modules.add(module.__name__)
        for _, obj in inspect.getmembers(module, callable):
            if hasattr(obj, CONSTRUCTOR_META_KEY):
                self.register(obj)

    def get(self, name: str) -> Optional[Tuple[Callable, ConstructorConfig]]:
        if not self._terms:
            self.scan_builtins()
        return self._terms.get(name)

    def names(self) -> List[str]:
        if not self._terms:
            self.scan_builtins()
        return sorted(self._terms)

    def describe(self) -> List[ConstructorConfig]:
        return [self._terms[name][1] for name in self.names()]
