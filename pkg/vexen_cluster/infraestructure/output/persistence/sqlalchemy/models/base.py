"""Declarative base of the run store tables."""

from sqlalchemy import MetaData
from sqlalchemy.orm import DeclarativeBase

NAMING_CONVENTION = {
	"ix": "ix_%(column_0_label)s",
	"uq": "uq_%(table_name)s_%(column_0_name)s",
	"pk": "pk_%(table_name)s",
}


class Base(DeclarativeBase):
	"""Base class of the benchmark run models; constraint names follow NAMING_CONVENTION"""

	metadata = MetaData(naming_convention=NAMING_CONVENTION)
