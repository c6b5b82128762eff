from gemforge.ontology.location import LocationAssignment
from gemforge.ontology.model import (
    CORE_ONTOLOGY_IRI,
    OntologyModel,
    PropertyDecl,
    SubclassCycleError,
    infer_types,
    is_subclass_of,
    load_ontology,
    load_ontology_file,
    load_shipped_ontology,
    resolve_imports,
    shipped_loader,
    shipped_ontology_text,
)
from gemforge.ontology.validate import ValidationReport, Violation, validate_individual

__all__ = [
    "CORE_ONTOLOGY_IRI",
    "LocationAssignment",
    "OntologyModel",
    "PropertyDecl",
    "SubclassCycleError",
    "ValidationReport",
    "Violation",
    "infer_types",
    "is_subclass_of",
    "load_ontology",
    "load_ontology_file",
    "load_shipped_ontology",
    "resolve_imports",
    "shipped_loader",
    "shipped_ontology_text",
    "validate_individual",
]
