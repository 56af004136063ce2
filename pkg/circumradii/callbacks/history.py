"""History callback module."""

from collections import Counter
from typing import TYPE_CHECKING, Any, Optional

from circumradii.callbacks.base import BaseCallback

if TYPE_CHECKING:  # pragma: no cover
    from circumradii.experiments.records import ExperimentRecord


class History(BaseCallback):
    """History callback class that can be applied to any experiment.

    :param name: name value, defaults to None. If None, the name will be set
        to `History`.
    :type name: Optional[str]
    :param fields: payload fields to track, defaults to None
    :type fields: Optional[list[str]]

    :Note:
    By default the following variables are stored:

    - `trial`: list of trial indices
    - `passed`: list of pass flags
    - `num_passed` / `num_failed`: pass and fail counts
    - `tallies`: summed counts of every dict-valued payload field of
      integers (e.g. how often each exclusion case occurred)
    Payload fields given in `fields` are stored as lists as well.

    :Example:

    >>> from circumradii.callbacks import History
    >>> from circumradii.experiments import GapCases, GapCasesConfig
    >>> experiment = GapCases(
    ...     config=GapCasesConfig(trials=5, seed=0),
    ...     callbacks=[History(name="history", fields=["no_coincidence"])],
    ... )
    >>> records, logs = experiment.run()
    >>> logs["history"]["num_failed"]
    0
    """  # noqa: E501  # pylint: disable=line-too-long

    def __init__(  # noqa: D107
        self,
        name: Optional[str] = None,
        fields: Optional[list[str]] = None,
    ) -> None:
        super().__init__(name=name)
        self.fields: list[str] = []
        self.history: dict[str, list[Any]] = {
            "trial": [],
            "passed": [],
        }
        self.tallies: dict[str, Counter] = {}
        if fields is not None:
            self.add_fields(fields_=fields)

    def add_fields(self, fields_: list[str]) -> None:
        """Add payload fields to track.

        :param fields_: list of payload field names
        :type fields_: list[str]
        """
        self.fields.extend(fields_)
        self.history = {**self.history, **{field: [] for field in fields_}}

    def on_trial_end(self, record: "ExperimentRecord") -> None:
        """On trial end method.

        :param record: record of the finished trial
        :type record: ExperimentRecord
        """
        self.history["trial"].append(record.trial)
        self.history["passed"].append(record.passed)
        for field in self.fields:
            self.history[field].append(record.payload.get(field))
        for key, value in record.payload.items():
            if isinstance(value, dict) and all(
                isinstance(count, int) for count in value.values()
            ):
                self.tallies.setdefault(key, Counter()).update(value)

        num_passed = sum(self.history["passed"])
        self.logs.update(
            **self.history,
            num_passed=num_passed,
            num_failed=len(self.history["passed"]) - num_passed,
            tallies={key: dict(counter) for key, counter in self.tallies.items()},
        )

    def reset(self) -> None:
        """Reset method."""
        for key in self.history:
            self.history[key].clear()
        self.tallies.clear()
        self.logs.clear()
