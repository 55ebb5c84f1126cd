#!/usr/bin/env python


class GsError(Exception):
    def __init__(self, message=None, original_exception=None):
        self.original_exception = original_exception
        self.message = str(message) if message is not None else ""

    def __str__(self):
        return self.message


class MalformedPresentation(GsError):
    """A presentation table or a term graph is internally inconsistent."""
    pass


class MissingPreorder(GsError):
    """The operation needs a preorder on homsets but the presentation has none."""

    def __init__(self, message=None, original_exception=None):
        super(MissingPreorder, self).__init__(message=message or "presentation has no preorder on its homsets",
                                              original_exception=original_exception)


class MissingObject(GsError):
    """A tensor product needed by the operation falls outside the truncated object list."""

    def __init__(self, objects, message=None, original_exception=None):
        super(MissingObject, self).__init__(message=message, original_exception=original_exception)
        self.objects = tuple(objects)

    def __str__(self):
        msg = "Tensor of {0} is not in the object list".format(" x ".join(str(o) for o in self.objects))
        if self.message:
            msg += ": {0}".format(self.message)
        return msg


class MissingStructure(GsError):
    def __init__(self, family, message=None, original_exception=None):
        super(MissingStructure, self).__init__(message=message, original_exception=original_exception)
        self.family = family

    def __str__(self):
        msg = "Functor has no {0} structure".format(self.family)
        if self.message:
            msg += ": {0}".format(self.message)
        return msg


class Infeasible(GsError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, size=None, cap=None, message=None, original_exception=None):
        super(Infeasible, self).__init__(message=message, original_exception=original_exception)
        self.size = size
        self.cap = cap

    def __str__(self):
        if self.size is None:
            msg = "Enumeration is not possible"
        else:
            msg = "Enumeration of {0} items exceeds the cap of {1}".format(self.size, self.cap)
        if self.message:
            msg += ": {0}".format(self.message)
        return msg


class DimensionMismatch(GsError):
    def __init__(self, expected, actual, message=None, original_exception=None):
        super(DimensionMismatch, self).__init__(message=message, original_exception=original_exception)
        self.expected = expected
        self.actual = actual

    def __str__(self):
        msg = "Dimension mismatch: expected {0}, got {1}".format(self.expected, self.actual)
        if self.message:
            msg += " ({0})".format(self.message)
        return msg


class NotMonotone(GsError):
    """A map between preorders sends related elements to unrelated ones."""

    def __init__(self, witness, message=None, original_exception=None):
        super(NotMonotone, self).__init__(message=message, original_exception=original_exception)
        self.witness = witness

    def __str__(self):
        x, y = self.witness
        msg = "Map is not monotone: {0} <= {1} but their images are unrelated".format(x, y)
        if self.message:
            msg += ": {0}".format(self.message)
        return msg


class InvalidPreorder(GsError):
    pass


class RowSumViolation(GsError):
    def __init__(self, row, total, message=None, original_exception=None):
        super(RowSumViolation, self).__init__(message=message, original_exception=original_exception)
        self.row = row
        self.total = total

    def __str__(self):
        if self.message:
            return "Row {0}: {1}".format(self.row, self.message)
        return "Row {0} sums to {1}, not 1".format(self.row, self.total)


class InterfaceMismatch(GsError):
    def __init__(self, expected, actual, message=None, original_exception=None):
        super(InterfaceMismatch, self).__init__(message=message, original_exception=original_exception)
        self.expected = tuple(expected)
        self.actual = tuple(actual)

    def __str__(self):
        return "Interface mismatch: expected [{0}], got [{1}]".format(" ".join(self.expected),
                                                                       " ".join(self.actual))


class SortMismatch(GsError):
    pass


class TypeMismatch(GsError):
    pass


class NotGsMonoidalMonad(GsError):
    def __init__(self, report, message=None, original_exception=None):
        super(NotGsMonoidalMonad, self).__init__(message=message, original_exception=original_exception)
        self.report = report

    def __str__(self):
        msg = "Monad is not gs-monoidal"
        if self.report is not None and self.report.witness is not None:
            msg += ": {0}".format(self.report.witness)
        return msg


class FixtureError(GsError):
    def __init__(self, message=None, path=None, original_exception=None):
        super(FixtureError, self).__init__(message=message, original_exception=original_exception)
        self.path = path

    def __str__(self):
        if self.path:
            return "{0}: {1}".format(self.path, self.message)
        return self.message


class UsageError(GsError):
    pass


class MoreThanOneResult(GsError):
    """Only one morphism was requested, but several matched."""
    pass
