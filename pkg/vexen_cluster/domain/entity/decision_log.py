"""Decision log entity."""

import logging
import threading
from collections.abc import Iterator
from dataclasses import dataclass, field
from datetime import UTC, datetime

logger = logging.getLogger("vexen_cluster.decisions")


@dataclass(frozen=True)
class DecisionEntry:
	"""A single logged decision"""

	timestamp: datetime
	message: str


@dataclass
class DecisionLog:
	"""
	Append-only, thread-safe trace of algorithmic choices.

	Every entry is also emitted at DEBUG level through the
	``vexen_cluster.decisions`` logger.
	"""

	_entries: list[DecisionEntry] = field(default_factory=list)
	_lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

	def record(self, message: str) -> DecisionEntry:
		"""Append a message and return the stored entry"""
		entry = DecisionEntry(timestamp=datetime.now(UTC), message=message)
		with self._lock:
			self._entries.append(entry)
		logger.debug(message)
		return entry

	@property
	def entries(self) -> tuple[DecisionEntry, ...]:
		with self._lock:
			return tuple(self._entries)

	def messages(self) -> list[str]:
		"""Messages in append order"""
		return [entry.message for entry in self.entries]

	def contains(self, fragment: str) -> bool:
		"""True if any message contains the fragment"""
		return any(fragment in message for message in self.messages())

	def __iter__(self) -> Iterator[DecisionEntry]:
		return iter(self.entries)

	def __len__(self) -> int:
		with self._lock:
			return len(self._entries)
