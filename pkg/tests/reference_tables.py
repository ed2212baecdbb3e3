"""Frozen reference data: word-image tables for the rho = 0.8 unbiased
two-map measure and the lower-bound-by-range table, kept at their
published precision for regression checks."""

# word -> image of [0.3, 0.7], 5 printed decimals, |word| = 4
IMAGES_03_07 = {
    "0000": (0.12288, 0.28672),
    "0001": (0.22528, 0.38912),
    "0010": (0.25088, 0.41472),
    "0100": (0.28288, 0.44672),
    "1000": (0.32288, 0.48672),
    "0011": (0.35328, 0.51712),
    "0101": (0.38528, 0.54912),
    "0110": (0.41088, 0.57472),
    "1001": (0.42528, 0.58912),
    "1010": (0.45088, 0.61472),
    "1100": (0.48288, 0.64672),
    "0111": (0.51328, 0.67712),
    "1011": (0.55328, 0.71712),
    "1101": (0.58528, 0.74912),
    "1110": (0.61088, 0.77472),
    "1111": (0.71328, 0.87712),
}

# word -> image of [0, 1] as printed (4 decimals, 1.000 at the right end)
IMAGES_UNIT = {
    "0000": ("0.0000", "0.4096"),
    "0001": ("0.1024", "0.5120"),
    "0010": ("0.1280", "0.5376"),
    "0100": ("0.1600", "0.5696"),
    "1000": ("0.2000", "0.6096"),
    "0011": ("0.2304", "0.6400"),
    "0101": ("0.2624", "0.6720"),
    "0110": ("0.2880", "0.6976"),
    "1001": ("0.3024", "0.7120"),
    "1010": ("0.3280", "0.7376"),
    "1100": ("0.3600", "0.7696"),
    "0111": ("0.3904", "0.8000"),
    "1011": ("0.4304", "0.8400"),
    "1101": ("0.4624", "0.8720"),
    "1110": ("0.4880", "0.8976"),
    "1111": ("0.5904", "1.000"),
}

# (rho_lo, rho_hi) -> printed lower bound over the range, word lengths <= 10
LOWER_BOUND_RANGES = [
    (0.50, 0.55, 0.792021),
    (0.55, 0.60, 0.825663),
    (0.60, 0.65, 0.840348),
    (0.65, 0.70, 0.824701),
    (0.70, 0.75, 0.750984),
    (0.75, 0.80, 0.635012),
    (0.80, 0.851, 0.416226),
]


def printed_tolerance(text: str) -> float:
    """Half a unit in the last printed decimal place."""
    decimals = len(text.split(".")[1]) if "." in text else 0
    return 0.5 * 10.0 ** (-decimals)
