"""hexacent: inscribed affine-regular hexagons and the 4/21 centroid bound."""

__version__ = "0.1.0"

from .geom_core import (  # noqa: F401
    AffineMap,
    ConvexPolygon,
    DegenerateInput,
    GeomError,
    Line,
    NonConvex,
    Point,
    area_and_centroid,
    clip_halfplane,
    composite_centroid,
    convex_hull,
    gauge,
    homothet,
)
from .hexagon import (  # noqa: F401
    AffineRegularHexagon,
    HexagonFit,
    InscriptionFailed,
    ThinBody,
    inscribe,
)
from .steiner import symmetrize  # noqa: F401
from .centroid_bound import (  # noqa: F401
    RATIO,
    BoundReport,
    MonteCarloReport,
    NotCanonical,
    body_G,
    body_P,
    canonical_hexagon,
    check_theorem,
    hexagon_gauge,
    in_star,
    monte_carlo,
    random_body,
    star_violations,
    support_parameter_w,
    tight_pentagon,
    wing_monotonicity,
)
from .proof_verifier import (  # noqa: F401
    DomainError,
    Region,
    SignCertificate,
    VerificationLedger,
    certify_sign,
    run_claim,
    run_full_verification,
    z_star,
)
from .svg import render_svg  # noqa: F401
