#!/usr/bin/env python

import logging
import types

from ..errors import MissingStructure

log = logging.getLogger(__name__)


def _evaluate(unit):
    # zero-argument functions compute the unit structure map lazily
    return unit() if isinstance(unit, types.FunctionType) else unit


def _as_callable(table, what):
    if table is None or callable(table):
        return table

    def _lookup(*key):
        k = key[0] if len(key) == 1 else key
        try:
            return table[k]
        except KeyError:
            raise MissingStructure(what, message="no entry for {0}".format(k))
    return _lookup


class FunctorData(object):
    """
    A mapping between two presentations together with optional lax and oplax structure.

    Every table may be a dict or a callable: ``obj_map(A)``, ``mor_map(f)``, ``psi(A, B)``, ``psi0()``,
    ``phi(A, B)``, ``phi0()``. Dict tables for ``psi``/``phi`` are keyed by object pairs.

    :param source: the source :class:`GsPresentation`
    :param target: the target :class:`GsPresentation`
    :param str name: label used in reports
    """
    def __init__(self, source, target, obj_map, mor_map, psi=None, psi0=None, phi=None, phi0=None, name=None):
        self.source = source
        self.target = target
        self.name = name or "F"
        self._obj = _as_callable(obj_map, "object")
        self._mor = _as_callable(mor_map, "morphism")
        self._psi = _as_callable(psi, "lax")
        self._phi = _as_callable(phi, "oplax")
        self._psi0 = psi0
        self._phi0 = phi0

    @property
    def has_lax(self):
        return self._psi is not None and self._psi0 is not None

    @property
    def has_oplax(self):
        return self._phi is not None and self._phi0 is not None

    def obj(self, a):
        return self._obj(a)

    def mor(self, f):
        return self._mor(f)

    def psi(self, a, b):
        if self._psi is None:
            raise MissingStructure("lax", message=self.name)
        return self._psi(a, b)

    def psi0(self):
        if self._psi0 is None:
            raise MissingStructure("lax", message="{0} has no unit laxator".format(self.name))
        return _evaluate(self._psi0)

    def phi(self, a, b):
        if self._phi is None:
            raise MissingStructure("oplax", message=self.name)
        return self._phi(a, b)

    def phi0(self):
        if self._phi0 is None:
            raise MissingStructure("oplax", message="{0} has no unit oplaxator".format(self.name))
        return _evaluate(self._phi0)

    def require(self, family):
        if family == "lax" and not self.has_lax:
            raise MissingStructure("lax", message=self.name)
        if family == "oplax" and not self.has_oplax:
            raise MissingStructure("oplax", message=self.name)

    def with_structure(self, psi=None, psi0=None, phi=None, phi0=None, name=None):
        """A copy with some structure maps replaced, used to inject faults."""
        return FunctorData(self.source, self.target, self._obj, self._mor,
                           psi=_as_callable(psi, "lax") if psi is not None else self._psi,
                           psi0=psi0 if psi0 is not None else self._psi0,
                           phi=_as_callable(phi, "oplax") if phi is not None else self._phi,
                           phi0=phi0 if phi0 is not None else self._phi0,
                           name=name or self.name)

    def __repr__(self):
        return "FunctorData({0}: {1} -> {2})".format(self.name, self.source.name, self.target.name)


def identity_functor(P, name=None):
    """The identity on ``P`` with identity lax and oplax structure."""
    unit = P.identity(P.unit())
    return FunctorData(P, P, lambda a: a, lambda f: f,
                       psi=lambda a, b: P.identity(P.model.tensor_obj(a, b)), psi0=unit,
                       phi=lambda a, b: P.identity(P.model.tensor_obj(a, b)), phi0=unit,
                       name=name or "Id[{0}]".format(P.name))


def compose_functors(F, G, name=None):
    """
    ``F`` after ``G``, with structure ``F(psi_G) . psi_F`` and ``phi_F . F(phi_G)``.

    Families absent from either functor are absent from the composite.
    """
    T = F.target

    psi = psi0 = phi = phi0 = None
    if F.has_lax and G.has_lax:
        def psi(a, b):
            return T.compose(F.mor(G.psi(a, b)), F.psi(G.obj(a), G.obj(b)))

        def psi0():
            return T.compose(F.mor(G.psi0()), F.psi0())
    if F.has_oplax and G.has_oplax:
        def phi(a, b):
            return T.compose(F.phi(G.obj(a), G.obj(b)), F.mor(G.phi(a, b)))

        def phi0():
            return T.compose(F.phi0(), F.mor(G.phi0()))

    return FunctorData(G.source, T, lambda a: F.obj(G.obj(a)), lambda f: F.mor(G.mor(f)),
                       psi=psi, psi0=psi0, phi=phi, phi0=phi0,
                       name=name or "{0}.{1}".format(F.name, G.name))
