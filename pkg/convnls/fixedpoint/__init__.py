"""Fixed point extraction, refinement and cataloging."""

from .records import FixedPointRecord, FLAG_NOT_CERTIFIED, FLAG_TRIVIAL
from .extract import extract_candidate
from .newton import refine_newton, horizontal_basis
from .catalog import label_and_separate, catalog_to_json, save_catalog
