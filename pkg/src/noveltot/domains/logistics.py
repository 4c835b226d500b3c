"""Seeded random Logistics instance generation.

Each city has one airport plus extra locations; trucks move within a city,
airplanes between airports. Goals place each package at a fresh location.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Atom, GroundProblem
from ..pddl import ProblemDef, ground
from ..util import seeded_rng
from .fixtures import GeneratorExhausted, load_domain

_RETRIES = 50


@dataclass(frozen=True)
class LogisticsSizes:
    n_cities: int = 2
    n_locations: int = 1  # per city, in addition to the airport
    n_packages: int = 1
    n_trucks_per_city: int = 1
    n_airplanes: int = 1

    def validate(self) -> None:
        if self.n_cities < 1 or self.n_packages < 1:
            raise ValueError("need at least one city and one package")
        if self.n_locations < 0 or self.n_trucks_per_city < 0 or self.n_airplanes < 0:
            raise ValueError("negative size parameter")
        if self.n_cities > 1 and self.n_airplanes < 1:
            raise ValueError("multi-city instances need an airplane")
        if self.n_cities * (self.n_locations + 1) < 2:
            raise ValueError("need at least two places overall")
        if self.n_locations > 0 and self.n_trucks_per_city < 1:
            raise ValueError("non-airport locations need a truck in each city")


def logistics_problem(sizes: LogisticsSizes, seed: int, attempt: int = 0) -> ProblemDef:
    sizes.validate()
    rng = seeded_rng("logistics", sizes, seed, attempt)

    objects: list[tuple[str, str]] = []
    init: list[Atom] = []
    places_by_city: dict[str, list[str]] = {}
    airports: list[str] = []

    for c in range(1, sizes.n_cities + 1):
        city = f"city{c}"
        objects.append((city, "city"))
        airport = f"apt{c}"
        objects.append((airport, "airport"))
        airports.append(airport)
        places = [airport]
        for l in range(1, sizes.n_locations + 1):
            loc = f"loc{c}-{l}"
            objects.append((loc, "location"))
            places.append(loc)
        places_by_city[city] = places
        for place in places:
            init.append(Atom("in-city", (place, city)))
        for t in range(1, sizes.n_trucks_per_city + 1):
            truck = f"truck{c}-{t}"
            objects.append((truck, "truck"))
            init.append(Atom("at", (truck, rng.choice(places))))

    all_places = [p for places in places_by_city.values() for p in places]
    for a in range(1, sizes.n_airplanes + 1):
        plane = f"plane{a}"
        objects.append((plane, "airplane"))
        init.append(Atom("at", (plane, rng.choice(airports))))

    goal: list[Atom] = []
    for p in range(1, sizes.n_packages + 1):
        pkg = f"pkg{p}"
        objects.append((pkg, "package"))
        origin = rng.choice(all_places)
        init.append(Atom("at", (pkg, origin)))
        destination = rng.choice([x for x in all_places if x != origin])
        goal.append(Atom("at", (pkg, destination)))

    suffix = f"-r{attempt}" if attempt else ""
    return ProblemDef(
        name=f"log-{sizes.n_cities}c{sizes.n_packages}p-{seed}{suffix}",
        domain="logistics",
        objects=tuple(sorted(objects)),
        init=tuple(sorted(set(init))),
        goal=frozenset(goal),
    )


def logistics_generate(
    sizes: LogisticsSizes, seed: int, check_solvable: bool = True
) -> ProblemDef:
    """Generate a solvable instance, retrying (bounded) on unsolvable draws."""
    from ..iw.search import BudgetExceeded, optimal_plan_bfs

    for attempt in range(_RETRIES):
        problem = logistics_problem(sizes, seed, attempt)
        if not check_solvable:
            return problem
        try:
            plan = optimal_plan_bfs(ground_logistics(problem))
        except BudgetExceeded:
            plan = None
        if plan is not None:
            return problem
    raise GeneratorExhausted(f"gave up after {_RETRIES} draws (sizes={sizes}, seed={seed})")


def ground_logistics(problem: ProblemDef) -> GroundProblem:
    return ground(load_domain("logistics"), problem)
