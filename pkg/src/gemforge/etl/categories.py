"""Category mapping: application codes first, OpenStreetMap tag pairs second.

Both tables resolve to class local names in the venue ontology. Anything
unresolved falls back to the hierarchy root so no record is ever dropped for
classification reasons alone; fallbacks are counted, not silent.
"""

from __future__ import annotations

from typing import Mapping, Optional

from gemforge.namespaces import ARCO_NS, cg
from gemforge.rdf.terms import Iri

FALLBACK_CLASS = Iri(ARCO_NS + "CulturalProperty")

# application category code -> ontology class local name
APP_CATEGORIES: dict[str, str] = {
    "museum": "Museum",
    "art_gallery": "ArtGallery",
    "exhibition_centre": "ExhibitionCentre",
    "open_air_museum": "OpenAirMuseum",
    "cinema": "Cinema",
    "theatre": "Theatre",
    "opera_house": "OperaHouse",
    "puppet_theatre": "PuppetTheatre",
    "public_artwork": "PublicArtwork",
    "sculpture": "Sculpture",
    "mural": "Mural",
    "fountain": "Fountain",
    "arts_centre": "ArtsCentre",
    "coworking": "CoworkingSpace",
    "makerspace": "MakerSpace",
    "design_studio": "DesignStudio",
    "film_studio": "FilmStudio",
    "castle": "Castle",
    "fort": "Fort",
    "ruins": "Ruins",
    "archaeological_site": "ArchaeologicalSite",
    "historic_house": "HistoricHouse",
    "city_gate": "CityGate",
    "church": "Church",
    "cathedral": "Cathedral",
    "chapel": "Chapel",
    "monastery": "Monastery",
    "mosque": "Mosque",
    "synagogue": "Synagogue",
    "shrine": "Shrine",
    "cemetery": "Cemetery",
    "monument": "Monument",
    "memorial": "Memorial",
    "war_memorial": "WarMemorial",
    "triumphal_arch": "TriumphalArch",
    "festival": "Festival",
    "film_festival": "FilmFestival",
    "exhibition": "Exhibition",
    "concert_hall": "ConcertHall",
    "music_club": "MusicClub",
    "recording_studio": "RecordingStudio",
    "rehearsal_studio": "RehearsalStudio",
    "bandstand": "Bandstand",
    "library": "Library",
    "community_centre": "CommunityCentre",
    "cultural_centre": "CulturalCentre",
    "bookshop": "Bookshop",
    "eu_culture_from_home": "EUCultureFromHome",
}

# (osm key, osm value) -> ontology class local name
OSM_TAGS: dict[tuple[str, str], str] = {
    ("tourism", "museum"): "Museum",
    ("tourism", "gallery"): "ArtGallery",
    ("tourism", "artwork"): "PublicArtwork",
    ("amenity", "cinema"): "Cinema",
    ("amenity", "theatre"): "Theatre",
    ("amenity", "arts_centre"): "ArtsCentre",
    ("amenity", "library"): "Library",
    ("amenity", "community_centre"): "CommunityCentre",
    ("amenity", "fountain"): "Fountain",
    ("amenity", "place_of_worship"): "Church",
    ("amenity", "grave_yard"): "Cemetery",
    ("amenity", "studio"): "RecordingStudio",
    ("landuse", "cemetery"): "Cemetery",
    ("historic", "castle"): "Castle",
    ("historic", "fort"): "Fort",
    ("historic", "ruins"): "Ruins",
    ("historic", "archaeological_site"): "ArchaeologicalSite",
    ("historic", "monument"): "Monument",
    ("historic", "memorial"): "Memorial",
    ("historic", "city_gate"): "CityGate",
    ("historic", "church"): "Church",
    ("historic", "monastery"): "Monastery",
    ("historic", "house"): "HistoricHouse",
    ("building", "cathedral"): "Cathedral",
    ("building", "chapel"): "Chapel",
    ("building", "mosque"): "Mosque",
    ("building", "synagogue"): "Synagogue",
    ("building", "shrine"): "Shrine",
    ("shop", "books"): "Bookshop",
    ("leisure", "bandstand"): "Bandstand",
    ("artwork_type", "mural"): "Mural",
    ("artwork_type", "sculpture"): "Sculpture",
}


def map_category(
    code: str, osm_tags: Optional[Mapping[str, str]] = None
) -> tuple[Iri, bool]:
    """Resolve one category code to a class IRI.

    Returns (class, fell_back). Lookup order: application table, then any
    OSM tag pair, then the fallback root class.
    """
    local = APP_CATEGORIES.get(code)
    if local is not None:
        return cg(local), False
    for key, value in sorted((osm_tags or {}).items()):
        local = OSM_TAGS.get((key, value))
        if local is not None:
            return cg(local), False
    return FALLBACK_CLASS, True
