"""JSON documents printed by ``--json``."""

from __future__ import annotations

from pydantic import BaseModel

from tlrewrite.category import NetRecord


class CountPayload(BaseModel):
    n: int
    count: int


class BasisPayload(BaseModel):
    n: int
    format: str
    basis: list[str]


class NormalizePayload(BaseModel):
    n: int
    rules: str
    input: str
    normal_form: str
    terms: list[dict[str, str]]
    trace: list[str] = []


class RuleRecord(BaseModel):
    id: str
    family: str
    lhs: str
    rhs: str
    decreases_by: str


class RulesPayload(BaseModel):
    n: int
    rules: list[RuleRecord]
    terminating: bool


class CompletionPayload(BaseModel):
    n: int
    added: list[RuleRecord]
    total: int
    matches_completed_rules: bool


class ProductPayload(BaseModel):
    n: int
    power: int
    diagram: str


class BijectionPayload(BaseModel):
    n: int
    diagram: str
    dyck: str
    jnf: str


class OrientedPayload(BaseModel):
    n: int
    k: int
    input: str
    normal_form: str
    terms: list[dict[str, str]]


class TermPayload(BaseModel):
    mode: str
    input: str
    scalar_exp: int
    variable: str
    term: str
    net: NetRecord
    trace: list[str] = []


class HomEntry(BaseModel):
    net: NetRecord
    term: str


class HomPayload(BaseModel):
    mode: str
    dom: str
    cod: str
    dimension: int
    basis: list[HomEntry]
