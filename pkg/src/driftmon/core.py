"""Monitor, metric, reaction, and log lifecycle over a document store.

The command surface mirrors a fixed verb/object matrix: monitors and
reactions support set/get/run/delete, while metrics and logs only support
get/delete because they are produced by running monitors and reactions,
never written directly.  All state lives under hierarchical keys::

    model/{model_id}
    model/{model_id}/monitor/{monitor_id}
    model/{model_id}/monitor/{monitor_id}/baseline/{quantity}
    model/{model_id}/monitor/{monitor_id}/metrics/{eval_date}/{quantity}
    model/{model_id}/reaction/{reaction_id}
    model/{model_id}/reaction/{reaction_id}/log/{timestamp}
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from datetime import date, datetime, timezone
from enum import Enum
from typing import Any, Callable, Mapping

from .data import DatasetHandle, assemble_velocity_pairs, read_column
from .drift import drift_evaluate
from .errors import (
    NotFoundError,
    PreconditionError,
    UnsupportedCommandError,
    ValidationError,
)
from .performance import mae, wmape
from .sketch import QuantileSketch
from .store import FileStore, StoreKey, dumps_doc, loads_doc
from .summary import ApproxCdf, build_cdf

__all__ = [
    "MonitorKind",
    "ReactionKind",
    "Severity",
    "ModelRegistration",
    "MonitorConfig",
    "MetricRecord",
    "ReactionConfig",
    "LogRecord",
    "SUPPORTED_COMMANDS",
    "ensure_supported",
    "MonitoringService",
]

_IDENTIFIER_RE = re.compile(r"^[A-Za-z0-9._-]+$")

#: Default summary resolution used when a drift monitor does not override it.
DEFAULT_EPSILON = 0.001
DEFAULT_CDF_POINTS = 100
DEFAULT_DENSITY_BINS = 100

#: Quantity label under which performance records are stored.
VELOCITY_QUANTITY = "velocity"

_COMPARATORS: dict[str, Callable[[float, float], bool]] = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}

#: The verb/object matrix of the public command surface.
SUPPORTED_COMMANDS: dict[str, frozenset[str]] = {
    "monitor": frozenset({"set", "get", "run", "delete"}),
    "metrics": frozenset({"get", "delete"}),
    "reaction": frozenset({"set", "get", "run", "delete"}),
    "logs": frozenset({"get", "delete"}),
}


def ensure_supported(verb: str, entity: str) -> None:
    """Reject verb/object pairs outside the command matrix."""
    allowed = SUPPORTED_COMMANDS.get(entity)
    if allowed is None:
        raise UnsupportedCommandError(f"unknown object kind {entity!r}")
    if verb not in allowed:
        raise UnsupportedCommandError(
            f"{verb} is not supported for {entity}: metrics and logs are produced "
            f"by running monitors and reactions, not written directly"
        )


class MonitorKind(str, Enum):
    DRIFT = "drift"
    PERFORMANCE = "performance"


class ReactionKind(str, Enum):
    THRESHOLD = "threshold"
    REPORT = "report"


class Severity(str, Enum):
    INFO = "info"
    ALERT = "alert"


def _check_identifier(name: str, value: str) -> None:
    if not isinstance(value, str) or not _IDENTIFIER_RE.match(value):
        raise ValidationError(
            f"{name} must match [A-Za-z0-9._-]+, got {value!r}"
        )


def _now() -> datetime:
    return datetime.now(timezone.utc)


def _iso_seconds(ts: datetime) -> str:
    return ts.astimezone(timezone.utc).replace(microsecond=0).isoformat().replace("+00:00", "Z")


def _iso_micro(ts: datetime) -> str:
    # Log records keep full precision: their append-only keys are derived
    # from this timestamp and must stay unique and faithful to the body.
    return ts.astimezone(timezone.utc).isoformat(timespec="microseconds").replace("+00:00", "Z")


def _parse_ts(text: str) -> datetime:
    return datetime.fromisoformat(text.replace("Z", "+00:00"))


@dataclass(frozen=True)
class ModelRegistration:
    """A deployed model known to the monitoring service."""

    model_id: str
    description: str
    created_at: datetime

    def to_doc(self) -> dict[str, Any]:
        return {
            "created_at": _iso_seconds(self.created_at),
            "description": self.description,
            "model_id": self.model_id,
        }


@dataclass(frozen=True)
class MonitorConfig:
    """What to watch for one model and with what resolution."""

    monitor_id: str
    model_id: str
    kind: MonitorKind
    quantities: tuple[str, ...] = ()
    epsilon: float = DEFAULT_EPSILON
    cdf_points: int = DEFAULT_CDF_POINTS
    density_bins: int = DEFAULT_DENSITY_BINS

    def __post_init__(self) -> None:
        _check_identifier("monitor_id", self.monitor_id)
        _check_identifier("model_id", self.model_id)
        if self.kind is MonitorKind.DRIFT:
            if not self.quantities:
                raise ValidationError("a drift monitor needs at least one quantity")
            for q in self.quantities:
                _check_identifier("quantity", q)
            if not 0.0 < self.epsilon <= 0.5:
                raise ValidationError(f"epsilon must be in (0, 0.5], got {self.epsilon!r}")
            if self.cdf_points < 2:
                raise ValidationError(f"cdf_points must be >= 2, got {self.cdf_points!r}")
            if self.density_bins < 1:
                raise ValidationError(f"density_bins must be >= 1, got {self.density_bins!r}")
        elif self.quantities:
            raise ValidationError("a performance monitor takes no quantities")

    def to_doc(self) -> dict[str, Any]:
        parameters: dict[str, Any] = {}
        if self.kind is MonitorKind.DRIFT:
            parameters = {
                "cdf_points": self.cdf_points,
                "density_bins": self.density_bins,
                "epsilon": self.epsilon,
            }
        return {
            "kind": self.kind.value,
            "model_id": self.model_id,
            "monitor_id": self.monitor_id,
            "parameters": parameters,
            "quantities": list(self.quantities),
        }

    @classmethod
    def from_doc(cls, doc: Mapping[str, Any]) -> "MonitorConfig":
        params = doc.get("parameters") or {}
        return cls(
            monitor_id=doc["monitor_id"],
            model_id=doc["model_id"],
            kind=MonitorKind(doc["kind"]),
            quantities=tuple(doc.get("quantities") or ()),
            epsilon=float(params.get("epsilon", DEFAULT_EPSILON)),
            cdf_points=int(params.get("cdf_points", DEFAULT_CDF_POINTS)),
            density_bins=int(params.get("density_bins", DEFAULT_DENSITY_BINS)),
        )


@dataclass(frozen=True)
class MetricRecord:
    """One monitor evaluation for one quantity on one date."""

    model_id: str
    monitor_id: str
    eval_date: date
    quantity: str
    metrics: dict[str, float]
    context: dict[str, Any]

    def to_doc(self) -> dict[str, Any]:
        return {
            "context": dict(self.context),
            "eval_date": self.eval_date.isoformat(),
            "metrics": dict(self.metrics),
            "model_id": self.model_id,
            "monitor_id": self.monitor_id,
            "quantity": self.quantity,
        }

    @classmethod
    def from_doc(cls, doc: Mapping[str, Any]) -> "MetricRecord":
        return cls(
            model_id=doc["model_id"],
            monitor_id=doc["monitor_id"],
            eval_date=date.fromisoformat(doc["eval_date"]),
            quantity=doc["quantity"],
            metrics={k: float(v) for k, v in doc["metrics"].items()},
            context=dict(doc["context"]),
        )


@dataclass(frozen=True)
class ReactionConfig:
    """A rule that turns stored metrics into log entries."""

    reaction_id: str
    model_id: str
    kind: ReactionKind
    monitor_id: str
    metric_name: str | None = None
    comparator: str | None = None
    threshold: float | None = None
    date_from: date | None = None
    date_to: date | None = None
    sample_size: int | None = None

    def __post_init__(self) -> None:
        _check_identifier("reaction_id", self.reaction_id)
        _check_identifier("model_id", self.model_id)
        _check_identifier("monitor_id", self.monitor_id)
        if self.kind is ReactionKind.THRESHOLD:
            if not self.metric_name:
                raise ValidationError("a threshold reaction needs a metric_name")
            if self.comparator not in _COMPARATORS:
                raise ValidationError(
                    f"comparator must be one of {sorted(_COMPARATORS)}, got {self.comparator!r}"
                )
            if self.threshold is None or not math.isfinite(self.threshold):
                raise ValidationError("a threshold reaction needs a finite threshold")
        else:
            if self.date_from is None or self.date_to is None:
                raise ValidationError("a report reaction needs date_from and date_to")
            if self.date_from > self.date_to:
                raise ValidationError("report range is reversed: date_from is after date_to")
            if self.sample_size is None or self.sample_size < 2:
                raise ValidationError("a report reaction needs sample_size >= 2")

    def to_doc(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "kind": self.kind.value,
            "model_id": self.model_id,
            "monitor_id": self.monitor_id,
            "reaction_id": self.reaction_id,
        }
        if self.kind is ReactionKind.THRESHOLD:
            doc["comparator"] = self.comparator
            doc["metric_name"] = self.metric_name
            doc["threshold"] = float(self.threshold)
        else:
            doc["date_from"] = self.date_from.isoformat()
            doc["date_to"] = self.date_to.isoformat()
            doc["sample_size"] = self.sample_size
        return doc

    @classmethod
    def from_doc(cls, doc: Mapping[str, Any]) -> "ReactionConfig":
        kind = ReactionKind(doc["kind"])
        if kind is ReactionKind.THRESHOLD:
            return cls(
                reaction_id=doc["reaction_id"],
                model_id=doc["model_id"],
                kind=kind,
                monitor_id=doc["monitor_id"],
                metric_name=doc["metric_name"],
                comparator=doc["comparator"],
                threshold=float(doc["threshold"]),
            )
        return cls(
            reaction_id=doc["reaction_id"],
            model_id=doc["model_id"],
            kind=kind,
            monitor_id=doc["monitor_id"],
            date_from=date.fromisoformat(doc["date_from"]),
            date_to=date.fromisoformat(doc["date_to"]),
            sample_size=int(doc["sample_size"]),
        )


@dataclass(frozen=True)
class LogRecord:
    """The outcome of one reaction run."""

    model_id: str
    reaction_id: str
    created_at: datetime
    severity: Severity
    body: dict[str, Any]

    def to_doc(self) -> dict[str, Any]:
        return {
            "body": dict(self.body),
            "created_at": _iso_micro(self.created_at),
            "model_id": self.model_id,
            "reaction_id": self.reaction_id,
            "severity": self.severity.value,
        }

    @classmethod
    def from_doc(cls, doc: Mapping[str, Any]) -> "LogRecord":
        return cls(
            model_id=doc["model_id"],
            reaction_id=doc["reaction_id"],
            created_at=_parse_ts(doc["created_at"]),
            severity=Severity(doc["severity"]),
            body=dict(doc["body"]),
        )


def stride_sample(points: list, sample_size: int) -> list:
    """Deterministic uniform down-sampling that keeps the first and last
    elements; series at or under ``sample_size`` pass through unchanged."""
    if sample_size < 2:
        raise ValidationError(f"sample_size must be >= 2, got {sample_size}")
    n = len(points)
    if n <= sample_size:
        return list(points)
    indices = [round(i * (n - 1) / (sample_size - 1)) for i in range(sample_size)]
    return [points[i] for i in indices]


class MonitoringService:
    """Coordinates summaries, metrics, reactions, and logs for models."""

    def __init__(self, store: FileStore) -> None:
        self.store = store

    # -- keys ------------------------------------------------------------

    @staticmethod
    def _model_key(model_id: str) -> StoreKey:
        return StoreKey.of("model", model_id)

    @staticmethod
    def _monitor_key(model_id: str, monitor_id: str) -> StoreKey:
        return StoreKey.of("model", model_id, "monitor", monitor_id)

    @classmethod
    def _baseline_prefix(cls, model_id: str, monitor_id: str) -> StoreKey:
        return cls._monitor_key(model_id, monitor_id).child("baseline")

    @classmethod
    def _metrics_prefix(cls, model_id: str, monitor_id: str) -> StoreKey:
        return cls._monitor_key(model_id, monitor_id).child("metrics")

    @staticmethod
    def _reaction_key(model_id: str, reaction_id: str) -> StoreKey:
        return StoreKey.of("model", model_id, "reaction", reaction_id)

    @classmethod
    def _log_prefix(cls, model_id: str, reaction_id: str) -> StoreKey:
        return cls._reaction_key(model_id, reaction_id).child("log")

    # -- models ----------------------------------------------------------

    def register_model(self, model_id: str, description: str = "") -> ModelRegistration:
        """Create (or refresh) a model registration."""
        _check_identifier("model_id", model_id)
        registration = ModelRegistration(
            model_id=model_id, description=description, created_at=_now()
        )
        self.store.put(self._model_key(model_id), dumps_doc(registration.to_doc()))
        return registration

    def _require_model(self, model_id: str) -> None:
        _check_identifier("model_id", model_id)
        if self.store.get(self._model_key(model_id)) is None:
            raise NotFoundError(f"model {model_id!r} is not registered")

    # -- monitors ----------------------------------------------------------

    def set_monitor(self, config: MonitorConfig) -> MonitorConfig:
        """Store a monitor configuration; overwrites any previous version."""
        self._require_model(config.model_id)
        self.store.put(
            self._monitor_key(config.model_id, config.monitor_id),
            dumps_doc(config.to_doc()),
        )
        return config

    def get_monitor(self, model_id: str, monitor_id: str) -> MonitorConfig:
        body = self.store.get(self._monitor_key(model_id, monitor_id))
        if body is None:
            raise NotFoundError(f"monitor {monitor_id!r} not found for model {model_id!r}")
        return MonitorConfig.from_doc(loads_doc(body))

    def snapshot_baseline(
        self, model_id: str, monitor_id: str, training: DatasetHandle
    ) -> list[ApproxCdf]:
        """Summarise the training data once per configured quantity and
        persist the summaries as the monitor's baselines."""
        config = self.get_monitor(model_id, monitor_id)
        if config.kind is not MonitorKind.DRIFT:
            raise PreconditionError(
                f"monitor {monitor_id!r} is a {config.kind.value} monitor; "
                f"only drift monitors take baselines"
            )
        summaries = [
            self._summarise_column(training, quantity, config)
            for quantity in config.quantities
        ]
        for cdf in summaries:
            self.store.put(
                self._baseline_prefix(model_id, monitor_id).child(cdf.label),
                dumps_doc(_cdf_to_doc(cdf)),
            )
        return summaries

    @staticmethod
    def _summarise_column(
        data: DatasetHandle, quantity: str, config: MonitorConfig
    ) -> ApproxCdf:
        sketch = QuantileSketch(config.epsilon)
        for value in read_column(data, quantity):
            sketch.insert(value)
        if sketch.count == 0:
            raise PreconditionError(
                f"column {quantity!r} of {data.path} holds no usable values"
            )
        return build_cdf(sketch, config.cdf_points, quantity)

    def run_monitor(
        self,
        model_id: str,
        monitor_id: str,
        eval_date: date,
        data: DatasetHandle,
        sales: DatasetHandle | None = None,
    ) -> list[MetricRecord]:
        """Evaluate a monitor for one day and persist the metric records.

        Drift monitors compare each quantity's current summary against its
        stored baseline.  Performance monitors additionally need the daily
        sales handle to realise actual velocities.  Records are computed
        for every quantity before anything is written, so a failure never
        leaves a partial day behind.
        """
        config = self.get_monitor(model_id, monitor_id)
        if config.kind is MonitorKind.DRIFT:
            records = self._run_drift(config, eval_date, data)
        else:
            records = self._run_performance(config, eval_date, data, sales)
        for record in records:
            key = self._metrics_prefix(model_id, monitor_id).child(
                record.eval_date.isoformat(), record.quantity
            )
            self.store.put(key, dumps_doc(record.to_doc()))
        return records

    def _run_drift(
        self, config: MonitorConfig, eval_date: date, data: DatasetHandle
    ) -> list[MetricRecord]:
        baselines: dict[str, ApproxCdf] = {}
        for quantity in config.quantities:
            key = self._baseline_prefix(config.model_id, config.monitor_id).child(quantity)
            body = self.store.get(key)
            if body is None:
                raise PreconditionError(
                    f"no baseline for quantity {quantity!r}; run snapshot-baseline first"
                )
            baselines[quantity] = _cdf_from_doc(loads_doc(body))
        computed_at = _iso_seconds(_now())
        records = []
        for quantity in config.quantities:
            current = self._summarise_column(data, quantity, config)
            result = drift_evaluate(baselines[quantity], current, eval_date, config.density_bins)
            records.append(
                MetricRecord(
                    model_id=config.model_id,
                    monitor_id=config.monitor_id,
                    eval_date=eval_date,
                    quantity=quantity,
                    metrics={
                        "bhattacharyya_coefficient": result.bc,
                        "ks_distance": result.d_ks,
                        "ks_p_value": result.p_value,
                    },
                    context={
                        "computed_at": computed_at,
                        "n_baseline": result.n_baseline,
                        "n_current": result.n_current,
                    },
                )
            )
        return records

    def _run_performance(
        self,
        config: MonitorConfig,
        eval_date: date,
        data: DatasetHandle,
        sales: DatasetHandle | None,
    ) -> list[MetricRecord]:
        if sales is None:
            raise ValidationError("a performance monitor run needs a daily sales handle")
        pairs, excluded = assemble_velocity_pairs(data, sales, eval_date)
        if not pairs:
            raise PreconditionError(
                f"no predictions found for {eval_date.isoformat()} in {data.path}"
            )
        return [
            MetricRecord(
                model_id=config.model_id,
                monitor_id=config.monitor_id,
                eval_date=eval_date,
                quantity=VELOCITY_QUANTITY,
                metrics={"mae": mae(pairs), "wmape": wmape(pairs)},
                context={
                    "computed_at": _iso_seconds(_now()),
                    "n": len(pairs),
                    "n_excluded": excluded,
                },
            )
        ]

    def get_metrics(
        self, model_id: str, monitor_id: str, date_from: date, date_to: date
    ) -> list[MetricRecord]:
        """Stored records in the inclusive date range, ordered by
        (eval_date, quantity)."""
        if date_from > date_to:
            raise ValidationError("metric range is reversed: date_from is after date_to")
        records = []
        for key in self.store.list(self._metrics_prefix(model_id, monitor_id)):
            record = MetricRecord.from_doc(loads_doc(self.store.get(key)))
            if date_from <= record.eval_date <= date_to:
                records.append(record)
        records.sort(key=lambda r: (r.eval_date, r.quantity))
        return records

    # -- reactions ---------------------------------------------------------

    def set_reaction(self, config: ReactionConfig) -> ReactionConfig:
        """Store a reaction; the referenced model and monitor must exist."""
        self._require_model(config.model_id)
        self.get_monitor(config.model_id, config.monitor_id)
        self.store.put(
            self._reaction_key(config.model_id, config.reaction_id),
            dumps_doc(config.to_doc()),
        )
        return config

    def get_reaction(self, model_id: str, reaction_id: str) -> ReactionConfig:
        body = self.store.get(self._reaction_key(model_id, reaction_id))
        if body is None:
            raise NotFoundError(f"reaction {reaction_id!r} not found for model {model_id!r}")
        return ReactionConfig.from_doc(loads_doc(body))

    def run_reaction(self, model_id: str, reaction_id: str, as_of: date) -> list[LogRecord]:
        """Evaluate a reaction against stored metrics and append one log.

        Threshold reactions look at the latest evaluation date at or
        before ``as_of`` and alert when any quantity's metric crosses the
        threshold.  Report reactions bundle a down-sampled time series per
        quantity/metric.  Without any metrics there is nothing to react
        to, so no log is written and the run fails.
        """
        config = self.get_reaction(model_id, reaction_id)
        if config.kind is ReactionKind.THRESHOLD:
            record = self._threshold_log(config, as_of)
        else:
            record = self._report_log(config)
        key = self._log_prefix(model_id, reaction_id).child(
            record.created_at.strftime("%Y%m%dT%H%M%S.%fZ")
        )
        self.store.put(key, dumps_doc(record.to_doc()))
        return [record]

    def _monitor_records(
        self, config: ReactionConfig, date_from: date, date_to: date
    ) -> list[MetricRecord]:
        return self.get_metrics(config.model_id, config.monitor_id, date_from, date_to)

    def _threshold_log(self, config: ReactionConfig, as_of: date) -> LogRecord:
        records = [
            r
            for r in self._monitor_records(config, date.min, as_of)
            if config.metric_name in r.metrics
        ]
        if not records:
            raise PreconditionError(
                f"no {config.metric_name!r} metrics at or before {as_of.isoformat()} "
                f"for monitor {config.monitor_id!r}"
            )
        latest = max(r.eval_date for r in records)
        values = {
            r.quantity: r.metrics[config.metric_name]
            for r in records
            if r.eval_date == latest
        }
        compare = _COMPARATORS[config.comparator]
        fired = any(compare(v, config.threshold) for v in values.values())
        return LogRecord(
            model_id=config.model_id,
            reaction_id=config.reaction_id,
            created_at=_now(),
            severity=Severity.ALERT if fired else Severity.INFO,
            body={
                "comparator": config.comparator,
                "eval_date": latest.isoformat(),
                "fired": fired,
                "metric": config.metric_name,
                "threshold": config.threshold,
                "values": values,
            },
        )

    def _report_log(self, config: ReactionConfig) -> LogRecord:
        records = self._monitor_records(config, config.date_from, config.date_to)
        if not records:
            raise PreconditionError(
                f"no metrics in [{config.date_from}, {config.date_to}] "
                f"for monitor {config.monitor_id!r}"
            )
        by_series: dict[tuple[str, str], list[list]] = {}
        for record in records:
            for metric, value in sorted(record.metrics.items()):
                by_series.setdefault((record.quantity, metric), []).append(
                    [record.eval_date.isoformat(), value]
                )
        series = [
            {
                "metric": metric,
                "points": stride_sample(points, config.sample_size),
                "quantity": quantity,
            }
            for (quantity, metric), points in sorted(by_series.items())
        ]
        return LogRecord(
            model_id=config.model_id,
            reaction_id=config.reaction_id,
            created_at=_now(),
            severity=Severity.INFO,
            body={
                "date_from": config.date_from.isoformat(),
                "date_to": config.date_to.isoformat(),
                "sample_size": config.sample_size,
                "series": series,
            },
        )

    def get_logs(
        self,
        model_id: str,
        reaction_id: str,
        from_ts: datetime | None = None,
        to_ts: datetime | None = None,
    ) -> list[LogRecord]:
        """Stored logs in the inclusive timestamp range, oldest first."""
        if from_ts is not None and to_ts is not None and from_ts > to_ts:
            raise ValidationError("log range is reversed: from_ts is after to_ts")
        logs = []
        for key in self.store.list(self._log_prefix(model_id, reaction_id)):
            record = LogRecord.from_doc(loads_doc(self.store.get(key)))
            if from_ts is not None and record.created_at < from_ts:
                continue
            if to_ts is not None and record.created_at > to_ts:
                continue
            logs.append(record)
        logs.sort(key=lambda r: r.created_at)
        return logs

    # -- deletion ----------------------------------------------------------

    def delete(
        self,
        kind: str,
        *,
        model_id: str,
        monitor_id: str | None = None,
        reaction_id: str | None = None,
    ) -> int:
        """Remove one entity; returns the number of documents deleted.

        Deleting a monitor removes its configuration and baselines but
        keeps its metric history; deleting a reaction keeps its logs.
        Histories go away via the ``metrics`` and ``logs`` kinds.
        """
        ensure_supported("delete", kind)
        _check_identifier("model_id", model_id)
        if kind in ("monitor", "metrics"):
            if not monitor_id:
                raise ValidationError(f"deleting {kind} requires monitor_id")
            _check_identifier("monitor_id", monitor_id)
            if kind == "monitor":
                removed = self.store.delete(self._baseline_prefix(model_id, monitor_id))
                removed += int(self.store.remove(self._monitor_key(model_id, monitor_id)))
                return removed
            return self.store.delete(self._metrics_prefix(model_id, monitor_id))
        if not reaction_id:
            raise ValidationError(f"deleting {kind} requires reaction_id")
        _check_identifier("reaction_id", reaction_id)
        if kind == "reaction":
            return int(self.store.remove(self._reaction_key(model_id, reaction_id)))
        return self.store.delete(self._log_prefix(model_id, reaction_id))


def _cdf_to_doc(cdf: ApproxCdf) -> dict[str, Any]:
    return {
        "breakpoints": list(cdf.breakpoints),
        "label": cdf.label,
        "probabilities": list(cdf.probabilities),
        "sample_count": cdf.sample_count,
    }


def _cdf_from_doc(doc: Mapping[str, Any]) -> ApproxCdf:
    return ApproxCdf(
        label=doc["label"],
        sample_count=int(doc["sample_count"]),
        breakpoints=tuple(float(b) for b in doc["breakpoints"]),
        probabilities=tuple(float(p) for p in doc["probabilities"]),
    )
