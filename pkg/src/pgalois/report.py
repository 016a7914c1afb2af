"""Pass/fail check reports with witnesses, shared by the validators."""

from __future__ import annotations

__all__ = ["Check", "Report"]


class Check:
    __slots__ = ("name", "ok", "witness")

    def __init__(self, name, ok, witness=None):
        self.name = name
        self.ok = bool(ok)
        self.witness = witness

    def as_dict(self):
        d = {"name": self.name, "ok": self.ok}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    def __repr__(self):
        tail = "" if self.witness is None else " witness=%r" % (self.witness,)
        return "<%s %s%s>" % (self.name, "pass" if self.ok else "FAIL", tail)


class Report:
    def __init__(self, checks=None):
        self.checks = list(checks) if checks else []

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, ok, witness))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self):
        return {"ok": self.ok, "checks": [c.as_dict() for c in self.checks]}

    def __repr__(self):
        return "Report(ok=%s, %d checks)" % (self.ok, len(self.checks))
