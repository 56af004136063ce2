"""Quarantine callback module."""

import os
from typing import TYPE_CHECKING, Optional

from circumradii.callbacks.base import BaseCallback
from circumradii.utils.logger import logger
from circumradii.utils.persistence import write_records

if TYPE_CHECKING:  # pragma: no cover
    from circumradii.experiments.records import ExperimentRecord


class Quarantine(BaseCallback):
    """Quarantine callback class that preserves failing records.

    Every record whose payload reports a failure is appended to a JSON-lines
    file from the trial end hook, one line per record.

    :param path: quarantine file path
    :type path: str
    :param name: name value, defaults to None. If None, the name will be set
        to `Quarantine`.
    :type name: Optional[str]
    """  # noqa: E501  # pylint: disable=line-too-long

    def __init__(  # noqa: D107
        self,
        path: str,
        name: Optional[str] = None,
    ) -> None:
        super().__init__(name=name)
        self.path = path
        self.num_quarantined = 0

    @property
    def path(self) -> str:
        """Quarantine file path property.

        :return: quarantine file path
        :rtype: str
        """
        return self._path

    @path.setter
    def path(self, value: str) -> None:
        """Quarantine file path setter.

        :param value: value to be set
        :type value: str
        :raises TypeError: Type error exception
        """
        if not isinstance(value, (str, os.PathLike)):
            raise TypeError("path must be of type str or PathLike.")
        self._path = os.fspath(value)

    def on_trial_end(self, record: "ExperimentRecord") -> None:
        """On trial end method.

        :param record: record of the finished trial
        :type record: ExperimentRecord
        """
        if not record.passed:
            write_records(records=[record.to_dict()], filename=self.path, append=True)
            self.num_quarantined += 1
            logger.info(
                "Trial %s of %s failed, record quarantined in %s",
                record.trial,
                record.experiment,
                self.path,
            )
        self.logs.update(path=self.path, num_quarantined=self.num_quarantined)

    def reset(self) -> None:
        """Reset method."""
        self.num_quarantined = 0
        self.logs.clear()
