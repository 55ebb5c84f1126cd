#!/usr/bin/env python

import io
import json
import logging
import os.path

import yaml

from .core.presentation import GsPresentation, TableModel
from .errors import FixtureError, GsError
from .finrel.rel import Rel
from .finstoch.stoch import StochMatrix
from .functors.data import FunctorData
from .monads.base import get_monad
from .monads.kleisli import KleisliMorphism
from .preord.preorder import FinPreord, MonotoneMap
from .pspan.span import Span
from .termgraph.evaluate import Assignment
from .termgraph.graph import Box, TermGraph
from .termgraph.signature import Operation, Signature

log = logging.getLogger(__name__)


class FixtureMeta(type):
    schema_directory = os.path.join(os.path.dirname(__file__), "schemas")
    fixture_classes = {}

    def __new__(mcs, name, bases, clsdict):
        schema_file = clsdict.pop("schema_file", None)
        schema = {}
        if schema_file:
            with open(os.path.join(mcs.schema_directory, schema_file), "rb") as f:
                schema = yaml.safe_load(f.read())

        doc = clsdict.get("__doc__") or "A {0} fixture document.".format(clsdict.get("kind") or name)
        doc = doc.rstrip() + "\n\n"
        for field_name, field_info in schema.get("properties", {}).items():
            docstring = field_info.get("description", None)
            if docstring:
                doc += ":ivar %s: %s\n" % (field_name, docstring)
        clsdict["__doc__"] = doc

        cls = super(FixtureMeta, mcs).__new__(mcs, name, bases, clsdict)
        if clsdict.get("kind"):
            mcs.fixture_classes[clsdict["kind"]] = cls

        cls._valid_fields = []
        cls._required_fields = schema.get("required", [])
        cls._default_value = {}

        for field_name, field_info in schema.get("properties", {}).items():
            cls._valid_fields.append(field_name)
            if field_name in clsdict:
                continue

            default_value = field_info.get("default", None)
            if default_value:
                cls._default_value[field_name] = default_value

            field_format = field_info.get("type", "string")
            if field_format == "integer":
                setattr(cls, field_name, FieldDescriptor(field_name, coerce_to=int))
            elif field_format == "boolean":
                setattr(cls, field_name, FieldDescriptor(field_name, coerce_to=bool))
            elif field_format == "array":
                setattr(cls, field_name, ArrayFieldDescriptor(field_name))
            elif field_format == "object":
                setattr(cls, field_name, ObjectFieldDescriptor(field_name))
            else:
                setattr(cls, field_name, FieldDescriptor(field_name))

        return cls


class FieldDescriptor(object):
    def __init__(self, field_name, coerce_to=None, default_value=None):
        self.att_name = field_name
        self.default_value = default_value
        self.coerce_to = coerce_to

    def __get__(self, instance, instance_type=None):
        if instance is not None:
            value = instance._info.get(self.att_name, instance._default_value.get(self.att_name,
                                                                                 self.default_value))
            if value is None:
                return None
            if self.coerce_to is None:
                return value
            try:
                return self.coerce_to(value)
            except (TypeError, ValueError) as e:
                raise FixtureError("field {0} has an invalid value {1!r}".format(self.att_name, value),
                                   path=instance.path, original_exception=e)
        return self

    def __set__(self, instance, value):
        instance._info[self.att_name] = value


class ArrayFieldDescriptor(FieldDescriptor):
    def __get__(self, instance, instance_type=None):
        ret = super(ArrayFieldDescriptor, self).__get__(instance, instance_type)
        if instance is None:
            return ret
        return ret or []


class ObjectFieldDescriptor(FieldDescriptor):
    def __get__(self, instance, instance_type=None):
        ret = super(ObjectFieldDescriptor, self).__get__(instance, instance_type)
        if instance is None:
            return ret
        return ret if ret is not None else {}


class Fixture(object, metaclass=FixtureMeta):
    """Base class of fixture documents; subclasses name a kind and a schema."""
    kind = None

    def __init__(self, document=None, path=None):
        if document is not None and not isinstance(document, dict):
            raise FixtureError("fixture must be a mapping, not {0}".format(type(document).__name__), path=path)
        self._info = dict(document or {})
        self.path = path

    def validate(self):
        """
        Check the document against its schema.

        :raises FixtureError: naming the missing fields, or when the document declares another kind
        """
        missing = [f for f in self._required_fields if f not in self._info]
        if missing:
            raise FixtureError("missing required fields: {0}".format(", ".join(missing)), path=self.path)
        declared = self._info.get("kind")
        if declared is not None and declared != self.kind:
            raise FixtureError("expected a {0} document, found {1}".format(self.kind, declared), path=self.path)
        return True

    def build(self):
        """The domain object this document describes."""
        self.validate()
        try:
            return self._build()
        except FixtureError:
            raise
        except GsError as e:
            raise FixtureError(str(e), path=self.path, original_exception=e)
        except (TypeError, ValueError, KeyError, IndexError) as e:
            raise FixtureError("malformed {0} document: {1}".format(self.kind, e), path=self.path,
                               original_exception=e)

    def _build(self):
        raise NotImplementedError()

    @classmethod
    def from_object(cls, obj):
        raise NotImplementedError()

    def to_document(self):
        return dict(sorted(self._info.items()))

    def __repr__(self):
        return "<{0} {1}>".format(self.__class__.__name__, self.path or "inline")


class RelationFixture(Fixture):
    kind = "relation"
    schema_file = "relation.yaml"

    def _build(self):
        return Rel.from_pairs(self.src, self.tgt, [tuple(p) for p in self.pairs])

    @classmethod
    def from_object(cls, R):
        return cls({"kind": cls.kind, "src": R.src, "tgt": R.tgt, "pairs": sorted(list(p) for p in R.pairs())})


class PreorderFixture(Fixture):
    kind = "preorder"
    schema_file = "preorder.yaml"

    def _build(self):
        return FinPreord.from_pairs(self.size, [tuple(p) for p in self.leq_pairs], name=self.name)

    @classmethod
    def from_object(cls, P):
        pairs = [[x, y] for x in range(P.size) for y in range(P.size) if x != y and P.leq(x, y)]
        doc = {"kind": cls.kind, "size": P.size, "leq_pairs": pairs}
        if getattr(P, "name", None):
            doc["name"] = P.name
        return cls(doc)


class MonotoneMapFixture(Fixture):
    kind = "monotone_map"
    schema_file = "monotone_map.yaml"

    def _build(self):
        src = PreorderFixture(self.src, path=self.path).build()
        tgt = PreorderFixture(self.tgt, path=self.path).build()
        return MonotoneMap(src, tgt, values=[int(v) for v in self.values])

    @classmethod
    def from_object(cls, f):
        return cls({"kind": cls.kind, "src": PreorderFixture.from_object(f.src).to_document(),
                    "tgt": PreorderFixture.from_object(f.tgt).to_document(), "values": list(f.values)})


class KleisliFixture(Fixture):
    kind = "kleisli"
    schema_file = "kleisli.yaml"

    def _build(self):
        M = get_monad(self.monad)
        if len(self.table) != self.src:
            raise FixtureError("table has {0} entries for a source of size {1}".format(len(self.table), self.src),
                               path=self.path)
        return KleisliMorphism(M, self.src, self.tgt, [M.decode(v, self.tgt) for v in self.table])

    @classmethod
    def from_object(cls, f):
        return cls({"kind": cls.kind, "monad": f.monad.name, "src": f.src, "tgt": f.tgt,
                    "table": [f.monad.encode(v, f.tgt) for v in f.table]})


class SpanFixture(Fixture):
    kind = "span"
    schema_file = "span.yaml"

    def _build(self):
        return Span(self.src, self.tgt, [int(a) for a in self.left], [int(b) for b in self.right])

    @classmethod
    def from_object(cls, s):
        return cls({"kind": cls.kind, "src": s.src, "tgt": s.tgt, "left": list(s.left), "right": list(s.right)})


class StochFixture(Fixture):
    kind = "stoch"
    schema_file = "stoch.yaml"

    def _build(self):
        return StochMatrix(self.src, self.tgt, [[str(p) for p in row] for row in self.rows])

    @classmethod
    def from_object(cls, f):
        return cls({"kind": cls.kind, "src": f.src, "tgt": f.tgt,
                    "rows": [[str(p) for p in row] for row in f.rows()]})


class SignatureFixture(Fixture):
    kind = "signature"
    schema_file = "signature.yaml"

    def _build(self):
        ops = [Operation(op["name"], op.get("inputs", ()), op.get("outputs", ())) for op in self.ops]
        return Signature(self.sorts, ops)

    @classmethod
    def from_object(cls, sig):
        ops = [{"name": op.name, "inputs": list(op.inputs), "outputs": list(op.outputs)}
               for _, op in sorted(sig.ops.items())]
        return cls({"kind": cls.kind, "sorts": list(sig.sorts), "ops": ops})


class TermGraphFixture(Fixture):
    kind = "termgraph"
    schema_file = "termgraph.yaml"

    def _build(self):
        sig = SignatureFixture(self.signature, path=self.path).build()
        wires = []
        declared = {}
        for w, entry in enumerate(self.wires):
            if isinstance(entry, dict):
                wires.append(sig.check_word([entry["sort"]])[0])
                declared[w] = entry
            else:
                wires.append(sig.check_word([entry])[0])
        boxes = [Box(sig.op(b["op"]), b.get("inputs", ()), b.get("outputs", ())) for b in self.boxes]
        t = TermGraph(wires, self.inputs, self.outputs, boxes)
        for w, entry in declared.items():
            producer = entry.get("producer")
            if producer is not None and tuple(producer) != t.producers[w]:
                raise FixtureError("wire {0} declares producer {1} but is produced by {2}".format(
                    w, producer, list(t.producers[w])), path=self.path)
            consumers = entry.get("consumers")
            if consumers is not None and sorted(tuple(c) for c in consumers) != sorted(t.consumers(w)):
                raise FixtureError("wire {0} declares consumers {1} but is read by {2}".format(
                    w, consumers, [list(c) for c in t.consumers(w)]), path=self.path)
        return t

    @classmethod
    def from_object(cls, t, signature=None):
        if signature is None:
            sorts = sorted(set(t.wires))
            signature = Signature(sorts, dict((b.op.name, b.op) for b in t.boxes).values())
        wires = [{"sort": sort, "producer": list(t.producers[w]), "consumers": [list(c) for c in t.consumers(w)]}
                 for w, sort in enumerate(t.wires)]
        boxes = [{"op": b.op.name, "inputs": list(b.inputs), "outputs": list(b.outputs)} for b in t.boxes]
        return cls({"kind": cls.kind, "signature": SignatureFixture.from_object(signature).to_document(),
                    "wires": wires, "inputs": list(t.inputs), "outputs": list(t.outputs), "boxes": boxes})


class PresentationFixture(Fixture):
    kind = "presentation"
    schema_file = "presentation.yaml"

    def _build(self):
        leq = self._info.get("leq")
        model = TableModel(
            objects=self.objects,
            unit=self.unit,
            tensor_obj=dict(((a, b), c) for a, b, c in self.tensor_obj),
            morphisms=dict((f, tuple(t)) for f, t in self.morphisms.items()),
            compose=dict(((g, f), h) for g, f, h in self.compose),
            identity=self.identity,
            tensor_mor=dict(((f, g), h) for f, g, h in self.tensor_mor),
            symmetry=dict(((a, b), s) for a, b, s in self.symmetry),
            dup=self.dup,
            discharge=self.discharge,
            leq=None if leq is None else [tuple(p) for p in leq],
        )
        model.validate()
        name = self.name or (os.path.splitext(os.path.basename(self.path))[0] if self.path else "table")
        return GsPresentation(model, model.objects, cap=len(model.morphisms) + 1, name=name)


class FunctorFixture(Fixture):
    kind = "functor"
    schema_file = "functor.yaml"

    def _presentation(self, ref):
        if isinstance(ref, dict):
            return PresentationFixture(ref, path=self.path).build()
        base = os.path.dirname(self.path) if self.path else "."
        return load_fixture(os.path.join(base, ref), kind="presentation")

    def _build(self):
        S = self._presentation(self._info["source"])
        T = self._presentation(self._info["target"])

        def _pairs(entries):
            if not entries:
                return None
            return dict(((a, b), m) for a, b, m in entries)

        psi, phi = _pairs(self.psi), _pairs(self.phi)
        return FunctorData(S, T, dict(self.objects), dict(self.morphisms),
                           psi=psi, psi0=self.psi0 if psi is not None else None,
                           phi=phi, phi0=self.phi0 if phi is not None else None,
                           name=self.name or "F")


_model_kinds = {"finrel": "relation", "pspan": "span", "finstoch": "stoch", "finset": "kleisli"}


class AssignmentFixture(Fixture):
    """Interpretation of a signature in one of the built-in models, for evaluating term graphs."""
    kind = "assignment"
    schema_file = "assignment.yaml"

    def _morphism(self, name, document):
        if not isinstance(document, dict):
            raise FixtureError("morphism of operation {0} must be a mapping".format(name), path=self.path)
        document = dict(document)
        model = self.model
        if model.startswith("kleisli:"):
            document.setdefault("monad", model.partition(":")[2])
            kind = "kleisli"
        elif model == "finset":
            document.setdefault("monad", "identity")
            kind = "kleisli"
        else:
            kind = _model_kinds.get(model)
        if kind is None:
            raise FixtureError("unknown model {0}".format(model), path=self.path)
        return fixture_class(document.get("kind", kind))(document, path=self.path).build()

    def _build(self):
        sorts = dict((sort, int(n)) for sort, n in self.sorts.items())
        ops = dict((name, self._morphism(name, doc)) for name, doc in sorted(self.ops.items()))
        return Assignment(sorts, ops)


def read_document(path):
    """
    Parse a JSON or YAML document.

    :raises FixtureError: when the file is missing or does not parse
    """
    log.debug("Loading fixture %s", path)
    try:
        with io.open(path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)
    except (IOError, OSError) as e:
        raise FixtureError("cannot read fixture: {0}".format(e), path=path, original_exception=e)
    except yaml.YAMLError as e:
        raise FixtureError("cannot parse fixture: {0}".format(e), path=path, original_exception=e)


def fixture_class(kind):
    try:
        return FixtureMeta.fixture_classes[kind]
    except KeyError:
        raise FixtureError("unknown fixture kind {0}; expected one of {1}".format(
            kind, ", ".join(sorted(FixtureMeta.fixture_classes))))


def load_fixture(path, kind=None):
    """
    Load and build a fixture document.

    :param str path: a JSON or YAML file
    :param str kind: the expected kind; when omitted the document's own ``kind`` field decides
    :return: the domain object
    :raises FixtureError: on unreadable, incomplete or inconsistent documents
    """
    document = read_document(path)
    if not isinstance(document, dict):
        raise FixtureError("fixture must be a mapping", path=path)
    kind = kind or document.get("kind")
    if kind is None:
        raise FixtureError("fixture has no kind field and none was requested", path=path)
    return fixture_class(kind)(document, path=path).build()


def to_document(obj):
    """The fixture document of a domain object, with sorted keys and pairs."""
    for kind, cls, typ in _writers():
        if isinstance(obj, typ):
            return cls.from_object(obj).to_document()
    raise FixtureError("no fixture kind for {0}".format(type(obj).__name__))


def dump_json(document):
    return json.dumps(document, sort_keys=True, indent=2)


def _writers():
    return [
        ("relation", RelationFixture, Rel),
        ("preorder", PreorderFixture, FinPreord),
        ("monotone_map", MonotoneMapFixture, MonotoneMap),
        ("kleisli", KleisliFixture, KleisliMorphism),
        ("span", SpanFixture, Span),
        ("stoch", StochFixture, StochMatrix),
        ("signature", SignatureFixture, Signature),
        ("termgraph", TermGraphFixture, TermGraph),
    ]
