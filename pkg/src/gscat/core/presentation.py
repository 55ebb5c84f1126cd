#!/usr/bin/env python

from collections import defaultdict
import logging

from cachetools import LRUCache, cachedmethod

from ..errors import MalformedPresentation, MissingPreorder, MissingObject
from ..query import HomSet

log = logging.getLogger(__name__)

DEFAULT_CAP = 65536


class GsModel(object):
    """
    Backend of a gs-monoidal presentation: objects, morphisms and the structure operations.

    Objects must be hashable. Morphisms must be hashable values whose equality is identity of
    morphisms, unless the model overrides :meth:`equal`.

    :ivar sampled_comparisons: how many comparisons were decided on sampled points only
    """
    name = "model"
    ordered = False
    sampled_comparisons = 0

    def unit(self):
        raise NotImplementedError()

    def tensor_obj(self, a, b):
        raise NotImplementedError()

    def dom(self, f):
        raise NotImplementedError()

    def cod(self, f):
        raise NotImplementedError()

    def identity(self, a):
        raise NotImplementedError()

    def compose(self, g, f):
        """``g`` after ``f``."""
        raise NotImplementedError()

    def tensor(self, f, g):
        raise NotImplementedError()

    def symmetry(self, a, b):
        raise NotImplementedError()

    def dup(self, a):
        raise NotImplementedError()

    def discharge(self, a):
        raise NotImplementedError()

    def leq(self, f, g):
        raise MissingPreorder()

    def equal(self, f, g):
        return f == g

    def key(self, f):
        return f

    def label(self, f):
        return str(f)

    def hom_size(self, a, b):
        return None

    def hom_item(self, a, b, index):
        raise IndexError(index)

    def hom_index(self, a, b, f):
        return None

    def sample_hom(self, a, b, rng):
        raise NotImplementedError("{0} cannot sample hom({1}, {2})".format(self.name, a, b))


class TableModel(GsModel):
    """
    A presentation given entirely by finite tables, as read from a presentation fixture.

    Objects and morphisms are string identifiers.
    """
    name = "table"

    def __init__(self, objects, unit, tensor_obj, morphisms, compose, identity, tensor_mor, symmetry, dup,
                 discharge, leq=None):
        self.objects = list(objects)
        self._unit = unit
        self._tensor_obj = dict(tensor_obj)
        self.morphisms = dict(morphisms)
        self._compose = dict(compose)
        self._identity = dict(identity)
        self._tensor_mor = dict(tensor_mor)
        self._symmetry = dict(symmetry)
        self._dup = dict(dup)
        self._discharge = dict(discharge)

        self._homs = defaultdict(list)
        for mor_id in sorted(self.morphisms):
            self._homs[tuple(self.morphisms[mor_id])].append(mor_id)

        self.ordered = leq is not None
        self._leq = None
        if leq is not None:
            self._leq = self._close_order(leq)

    def _close_order(self, pairs):
        closure = set((f, f) for f in self.morphisms)
        for f, g in pairs:
            if f not in self.morphisms or g not in self.morphisms:
                raise MalformedPresentation("leq references unknown morphism in ({0}, {1})".format(f, g))
            if self.morphisms[f] != self.morphisms[g]:
                raise MalformedPresentation("leq relates {0} and {1} from different homsets".format(f, g))
            closure.add((f, g))

        changed = True
        while changed:
            changed = False
            by_source = defaultdict(set)
            for f, g in closure:
                by_source[f].add(g)
            for f, g in list(closure):
                for h in by_source[g]:
                    if (f, h) not in closure:
                        closure.add((f, h))
                        changed = True
        return frozenset(closure)

    def validate(self):
        """
        Check every table entry for unknown identifiers and mismatched domains.

        :raises MalformedPresentation: on the first bad entry
        """
        objects = set(self.objects)
        if self._unit not in objects:
            raise MalformedPresentation("unit {0} is not an object".format(self._unit))

        def _mor(f, where):
            if f not in self.morphisms:
                raise MalformedPresentation("{0} references unknown morphism {1}".format(where, f))
            return self.morphisms[f]

        for f, (a, b) in self.morphisms.items():
            if a not in objects or b not in objects:
                raise MalformedPresentation("morphism {0} has unknown endpoints {1} -> {2}".format(f, a, b))
        for (a, b), c in self._tensor_obj.items():
            if a not in objects or b not in objects or c not in objects:
                raise MalformedPresentation("tensor_obj entry {0} x {1} = {2} uses unknown objects".format(a, b, c))
        for (g, f), h in self._compose.items():
            f_dom, f_cod = _mor(f, "compose")
            g_dom, g_cod = _mor(g, "compose")
            if f_cod != g_dom:
                raise MalformedPresentation("compose({0}, {1}): codomain {2} is not domain {3}"
                                            .format(g, f, f_cod, g_dom))
            if tuple(_mor(h, "compose")) != (f_dom, g_cod):
                raise MalformedPresentation("compose({0}, {1}) = {2} has the wrong type".format(g, f, h))
        for a, f in self._identity.items():
            if tuple(_mor(f, "identity")) != (a, a):
                raise MalformedPresentation("identity of {0} is {1}, which is not an endomorphism of it".format(a, f))
        for (f, g), h in self._tensor_mor.items():
            a, b = _mor(f, "tensor_mor")
            c, d = _mor(g, "tensor_mor")
            expected = (self._tensor_obj.get((a, c)), self._tensor_obj.get((b, d)))
            if tuple(_mor(h, "tensor_mor")) != expected:
                raise MalformedPresentation("tensor_mor({0}, {1}) = {2} has the wrong type".format(f, g, h))
        for (a, b), f in self._symmetry.items():
            expected = (self._tensor_obj.get((a, b)), self._tensor_obj.get((b, a)))
            if tuple(_mor(f, "symmetry")) != expected:
                raise MalformedPresentation("symmetry({0}, {1}) = {2} has the wrong type".format(a, b, f))
        for a, f in self._dup.items():
            if tuple(_mor(f, "dup")) != (a, self._tensor_obj.get((a, a))):
                raise MalformedPresentation("dup({0}) = {1} has the wrong type".format(a, f))
        for a, f in self._discharge.items():
            if tuple(_mor(f, "discharge")) != (a, self._unit):
                raise MalformedPresentation("discharge({0}) = {1} has the wrong type".format(a, f))
        for a in self.objects:
            if a not in self._identity:
                raise MalformedPresentation("object {0} has no identity".format(a))

    def _lookup(self, table, key, what):
        try:
            return table[key]
        except KeyError:
            raise MalformedPresentation("{0} is not defined on {1}".format(what, key))

    def unit(self):
        return self._unit

    def tensor_obj(self, a, b):
        return self._tensor_obj.get((a, b))

    def dom(self, f):
        return self._lookup(self.morphisms, f, "morphism")[0]

    def cod(self, f):
        return self._lookup(self.morphisms, f, "morphism")[1]

    def identity(self, a):
        return self._lookup(self._identity, a, "identity")

    def compose(self, g, f):
        return self._lookup(self._compose, (g, f), "compose")

    def tensor(self, f, g):
        return self._lookup(self._tensor_mor, (f, g), "tensor_mor")

    def symmetry(self, a, b):
        return self._lookup(self._symmetry, (a, b), "symmetry")

    def dup(self, a):
        return self._lookup(self._dup, a, "dup")

    def discharge(self, a):
        return self._lookup(self._discharge, a, "discharge")

    def leq(self, f, g):
        if self._leq is None:
            raise MissingPreorder()
        return (f, g) in self._leq

    def hom_size(self, a, b):
        return len(self._homs.get((a, b), ()))

    def hom_item(self, a, b, index):
        return self._homs[(a, b)][index]


class GsPresentation(object):
    """
    A (preorder-enriched) gs-monoidal category truncated to a finite list of objects.

    All generic checkers consume presentations. The structure operations delegate to the model; the
    object list decides which law instances are quantified over. ``objects=None`` gives an open
    presentation, used as the target of functors, in which every tensor product is available.

    :param model: the :class:`GsModel` backend
    :param objects: object list, or ``None`` for an open presentation
    :param int cap: largest homset that may be enumerated
    :param str name: label used in reports
    """
    def __init__(self, model, objects=None, cap=DEFAULT_CAP, name=None, order=None, structure=None):
        self.model = model
        self.objects = None if objects is None else list(objects)
        self.cap = cap
        self.name = name or model.name
        self._order = order
        self._structure = structure or {}
        self._object_set = None if objects is None else set(self.objects)
        self._hom_cache = LRUCache(maxsize=4096)

    def _derive(self, **kwargs):
        settings = dict(model=self.model, objects=self.objects, cap=self.cap, name=self.name, order=self._order,
                        structure=self._structure)
        settings.update(kwargs)
        return GsPresentation(**settings)

    # order variants

    def with_order(self, leq, name=None):
        """
        The same presentation with a different preorder on every homset.

        :param leq: callable ``leq(f, g)`` returning bool
        """
        return self._derive(order=leq, name=name or self.name)

    def reversed_order(self):
        base = self.leq
        return self.with_order(lambda f, g: base(g, f), name=self.name + "[reversed]")

    def trivial_order(self):
        return self.with_order(self.equal, name=self.name + "[trivial]")

    def with_structure(self, dup=None, discharge=None, name=None):
        """
        The same category with a different choice of duplicators and dischargers.

        :param dup: mapping or callable sending an object to its duplicator
        :param discharge: mapping or callable sending an object to its discharger
        """
        structure = dict(self._structure)
        if dup is not None:
            structure["dup"] = dup
        if discharge is not None:
            structure["discharge"] = discharge
        return self._derive(structure=structure, name=name or self.name + "[restructured]")

    # objects

    def contains(self, a):
        return self._object_set is None or a in self._object_set

    def unit(self):
        return self.model.unit()

    def tensor_obj(self, a, b):
        """The tensor of two objects, or ``None`` when it falls outside the object list."""
        if a is None or b is None:
            return None
        c = self.model.tensor_obj(a, b)
        if c is None or not self.contains(c):
            return None
        return c

    def obj(self, *parts):
        """Left-nested tensor of several objects, ``None`` if any partial product is missing."""
        if not parts:
            return self.unit() if self.contains(self.unit()) else None
        result = parts[0]
        if not self.contains(result):
            return None
        for part in parts[1:]:
            result = self.tensor_obj(result, part)
            if result is None:
                return None
        return result

    def require_obj(self, *parts):
        result = self.obj(*parts)
        if result is None:
            raise MissingObject(parts)
        return result

    def object_list(self):
        if self.objects is None:
            raise MalformedPresentation("open presentation has no object list")
        return list(self.objects)

    # morphisms

    @cachedmethod(lambda self: self._hom_cache)
    def hom(self, a, b):
        return HomSet(self, a, b)

    def dom(self, f):
        return self.model.dom(f)

    def cod(self, f):
        return self.model.cod(f)

    def identity(self, a):
        return self.model.identity(a)

    def compose(self, g, f, *more):
        """``g`` after ``f``; extra arguments continue to the right: ``compose(h, g, f) = h(gf)``."""
        if more:
            return self.compose(g, self.compose(f, *more))
        return self.model.compose(g, f)

    def then(self, *morphisms):
        """Diagrammatic composite: ``then(f, g, h) = h g f``."""
        result = morphisms[0]
        for m in morphisms[1:]:
            result = self.model.compose(m, result)
        return result

    def tensor(self, f, g, *more):
        result = self.model.tensor(f, g)
        for h in more:
            result = self.model.tensor(result, h)
        return result

    def symmetry(self, a, b):
        return self.model.symmetry(a, b)

    def _structure_arrow(self, kind, a):
        override = self._structure.get(kind)
        if override is None:
            return getattr(self.model, kind)(a)
        if callable(override):
            return override(a)
        return override[a]

    def dup(self, a):
        return self._structure_arrow("dup", a)

    def discharge(self, a):
        return self._structure_arrow("discharge", a)

    @property
    def ordered(self):
        return self._order is not None or self.model.ordered

    def leq(self, f, g):
        if self._order is not None:
            return bool(self._order(f, g))
        if not self.model.ordered:
            raise MissingPreorder("{0} has no preorder on its homsets".format(self.name))
        return bool(self.model.leq(f, g))

    def require_order(self):
        if not self.ordered:
            raise MissingPreorder("{0} has no preorder on its homsets".format(self.name))

    def equiv(self, f, g):
        return self.leq(f, g) and self.leq(g, f)

    def equal(self, f, g):
        return self.model.equal(f, g)

    def label(self, f):
        return self.model.label(f)

    def __repr__(self):
        objects = "open" if self.objects is None else ",".join(str(o) for o in self.objects)
        return "GsPresentation({0}; {1})".format(self.name, objects)
