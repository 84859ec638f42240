"""Decorator for declaring constructor-expression terms.

``@graph_constructor`` attaches a ``ConstructorConfig`` to an adapter
function so that ``ConstructorRegistry`` can discover it.
"""

from dataclasses import dataclass, field
from typing import Callable, Tuple

CONSTRUCTOR_META_KEY = "_rigidlab_constructor_meta"
"""str: Attribute name where ``ConstructorConfig`` metadata is stored on a decorated function."""


@dataclass(frozen=True)
class ConstructorConfig:
    """Metadata of one grammar term.

    Args:
        name: Keyword that starts the term (``complete``, ``attach`` ...).
        description: One-line help text.
        call_form: ``True`` for ``name(<expr>; key=value ...)`` terms,
            ``False`` for ``name <ints> ...`` terms.
        keys: Option keys a call-form term accepts.
        required: Option keys that must be present.
        expression_keys: Option keys whose value is a nested expression.
    """

    name: str
    description: str
    call_form: bool = False
    keys: Tuple[str, ...] = ()
    required: Tuple[str, ...] = ()
    expression_keys: Tuple[str, ...] = field(default=())


def graph_constructor(
    name: str,
    description: str,
    keys: Tuple[str, ...] = (),
    required: Tuple[str, ...] = (),
    expression_keys: Tuple[str, ...] = (),
    call_form: bool = False,
) -> Callable[[Callable], Callable]:
    """Declare a function as the adapter for one grammar term.

    Prefix-form adapters receive the parsed ``Term``; call-form adapters
    receive the ``Term`` whose ``base`` holds the parenthesised graph.

    Example:
        >>> @graph_constructor("complete", "Complete graph K_n")
        ... def complete_term(term):
        ...     return complete(*term.ints(1))
    """

    def decorator(fn: Callable) -> Callable:
        config = ConstructorConfig(
            name=name,
            description=description,
            call_form=call_form or bool(keys),
            keys=tuple(keys),
            required=tuple(required),
            expression_keys=tuple(expression_keys),
        )
        setattr(fn, CONSTRUCTOR_META_KEY, config)
        return fn

    return decorator
