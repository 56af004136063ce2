"""Experiment records module."""

from typing import Any, NamedTuple

from circumradii.utils.persistence import dump_record


class ExperimentRecord(NamedTuple):
    """Self-contained outcome of one experiment trial.

    ``payload`` only holds JSON-native values (rationals are written as
    ``num/den`` strings) so that serialization is bit-exact across reruns.
    """

    experiment: str
    seed: int
    trial: int
    n: int
    grid: int
    mode: str
    payload: dict[str, Any]

    @property
    def passed(self) -> bool:
        """Pass flag property.

        :return: False iff the trial recorded a failed assertion
        :rtype: bool
        """
        return bool(self.payload.get("passed", True))

    def to_dict(self) -> dict[str, Any]:
        """Serialize record.

        :return: JSON-compatible dict
        :rtype: dict[str, Any]
        """
        return self._asdict()

    @classmethod
    def from_dict(cls, value: dict[str, Any]) -> "ExperimentRecord":
        """Deserialize record.

        :param value: dict produced by :func:`to_dict`
        :type value: dict[str, Any]
        :return: experiment record
        :rtype: ExperimentRecord
        """
        return cls(**{field: value[field] for field in cls._fields})

    def to_json(self) -> str:
        """Canonical JSON line.

        :return: JSON line without trailing newline
        :rtype: str
        """
        return dump_record(self.to_dict())
