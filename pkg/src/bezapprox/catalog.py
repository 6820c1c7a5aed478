"""Built-in test curves and the table layouts used to benchmark them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constrain import ContactOrder
from .curves import RationalBezierCurve

__all__ = ["BuiltinExample", "EXAMPLES", "get_example"]


@dataclass(frozen=True)
class BuiltinExample:
    """A reference curve plus the degrees, contacts and sampling its table uses.

    ``contacts`` of ``(None,)`` means the default schedule at every degree.
    When ``hausdorff_only`` is set the table reports Hausdorff distances per
    contact order instead of d_max / d_l1 per degree.
    """

    id: int
    title: str
    curve: RationalBezierCurve
    degrees: tuple[int, ...]
    contacts: tuple[ContactOrder | None, ...] = (None,)
    samples: int = 1000
    hausdorff_only: bool = False
    reference: dict = field(default_factory=dict, compare=False, repr=False)


# reference values: degree -> (dmax omega, dmax omega2, l1 omega, l1 omega2)
_TABLE1 = {
    4: (0.022907, 0.023911, 0.004237, 0.004185),
    5: (0.007390, 0.007743, 0.001162, 0.001149),
    6: (0.002849, 0.002987, 4.371940e-04, 4.321077e-04),
    7: (8.065401e-04, 8.469361e-04, 1.057862e-04, 1.045051e-04),
    8: (2.870556e-04, 3.017434e-04, 3.871330e-05, 3.827086e-05),
}

_TABLE2 = {
    5: (0.095480, 0.097236, 0.049830, 0.049584),
    6: (0.084855, 0.086855, 0.047010, 0.046837),
    7: (0.042564, 0.043096, 0.011913, 0.011892),
    8: (0.035610, 0.037288, 0.012254, 0.012140),
    9: (0.035619, 0.037298, 0.012246, 0.012133),
    10: (0.005224, 0.005420, 0.001600, 0.001578),
    11: (0.005374, 0.005620, 0.001566, 0.001537),
    12: (0.003154, 0.003335, 9.999698e-04, 9.814476e-04),
    13: (0.002257, 0.002361, 3.797283e-04, 3.675078e-04),
    14: (0.001222, 0.001307, 2.998330e-04, 2.944257e-04),
    15: (0.001206, 0.001290, 2.802343e-04, 2.754957e-04),
    16: (2.834610e-04, 3.006113e-04, 5.642958e-05, 5.503411e-05),
    17: (2.687450e-04, 2.860145e-04, 5.593685e-05, 5.458823e-05),
    18: (1.240139e-04, 1.326072e-04, 2.950490e-05, 2.879857e-05),
}

_TABLE3 = {
    6: (0.044480318880273, 0.051688479122085, 0.029655280096461, 0.031476147607478),
    7: (0.023868501893973, 0.032255328068047, 0.015879504757276, 0.017049959327487),
    8: (0.015149900429568, 0.018966490675292, 0.009620768974042, 0.010354259252695),
    9: (0.007889349654775, 0.010828999111530, 0.005297861401833, 0.005727317319065),
    10: (0.005260808682043, 0.006853089108748, 0.003256996716366, 0.003527894117667),
    11: (0.002696794398629, 0.003727944822126, 0.001818736806966, 0.001974652524091),
    12: (0.001847253697888, 0.002461821331414, 0.001126845692919, 0.001225098891989),
    13: (9.389817537108827e-04, 0.001303331966052, 6.345106044598648e-04, 6.908760850927994e-04),
    14: (6.534387865426517e-04, 8.830834863300054e-04, 3.949335561005876e-04, 4.303886131207782e-04),
    15: (3.306456957305267e-04, 4.601136641000896e-04, 2.236082280218562e-04, 2.439441476699068e-04),
    16: (2.323377554374534e-04, 3.169111231735876e-04, 1.395669996426054e-04, 1.523518332243233e-04),
    17: (1.172969349325125e-04, 1.635210281226485e-04, 7.933336636596293e-05, 8.667628246221323e-05),
    18: (8.293326487723877e-05, 1.138220713997069e-04, 4.960554098475324e-05, 5.421467244232657e-05),
    19: (4.182337819389267e-05, 5.838233410876038e-05, 2.828053820034141e-05, 3.093173320810643e-05),
    20: (2.968719111016691e-05, 4.092516147539204e-05, 1.770286264378748e-05, 1.936610741449082e-05),
    21: (1.496952671851878e-05, 2.091183351643694e-05, 1.011718721185016e-05, 1.106881100291165e-05),
    22: (1.064108236597488e-05, 1.472951815919057e-05, 6.336764567038676e-06, 6.938302189360695e-06),
    23: (5.374309134732559e-06, 7.516576177590380e-06, 3.631203840035559e-06, 3.974634105914670e-06),
}

# contact -> (hausdorff omega, hausdorff omega2) at degree 5
_TABLE4 = {
    (0, 0): (0.376676194034764, 0.487647609642435),
    (1, 1): (0.576850674814240, 0.519236375672234),
}

EXAMPLES: dict[int, BuiltinExample] = {
    1: BuiltinExample(
        id=1,
        title="cubic rational curve",
        curve=RationalBezierCurve(
            [(0.0, 0.0), (0.2, 1.5), (0.8, 1.5), (1.0, 0.0)],
            [1.0, 1.2, 1.5, 1.0],
        ),
        degrees=tuple(range(4, 9)),
        reference=_TABLE1,
    ),
    2: BuiltinExample(
        id=2,
        title="degree 7 rational curve",
        curve=RationalBezierCurve(
            [(0, 0), (0.5, 2), (1.5, 2), (2.5, 0.2), (3.5, 0.2), (4.5, 2), (5.5, 2), (6, 0)],
            [1.0, 2.0, 1.0 / 3.0, 2.0, 2.0, 1.0 / 3.0, 2.0, 1.0],
        ),
        degrees=tuple(range(5, 19)),
        reference=_TABLE2,
    ),
    3: BuiltinExample(
        id=3,
        title="quartic rational curve with small inner weights",
        curve=RationalBezierCurve(
            [(0.0, 0.0), (0.2, 1.5), (0.5, 1.0), (0.8, 1.5), (1.0, 0.0)],
            [1.0, 0.06, 0.08, 0.05, 1.0],
        ),
        degrees=tuple(range(6, 24)),
        contacts=(ContactOrder(1, 1),),
        reference=_TABLE3,
    ),
    4: BuiltinExample(
        id=4,
        title="degree 8 rational curve, Hausdorff error",
        curve=RationalBezierCurve(
            [(0, 0), (0, 2), (2, 10), (4, 6), (6, 6), (11, 16), (8, 1), (9, 1), (10, 0)],
            [1.0, 2.0, 3.0, 9.0, 12.0, 20.0, 30.0, 4.0, 1.0],
        ),
        degrees=(5,),
        contacts=(ContactOrder(0, 0), ContactOrder(1, 1)),
        samples=100,
        hausdorff_only=True,
        reference=_TABLE4,
    ),
}


def get_example(example_id: int) -> BuiltinExample:
    try:
        return EXAMPLES[int(example_id)]
    except (KeyError, ValueError):
        raise KeyError(f"unknown example id {example_id!r}; choose from {sorted(EXAMPLES)}") from None
