"""Published recognition data for the three worked examples.

Each example lists, for twenty features, the raw (Euclidean) and the
probability-corrected distance from the sample vector to each of the two
learned prototypes.  Values are transcribed as printed, including cells
that look inconsistent; nothing here is corrected.
"""

# (first ten features, last ten features) per row, as laid out in print
EXAMPLE_ROWS = {
    1: {
        "fv1_e": ([97, 39, 77, 65, 38, 66, 67, 99, 47, 97], [99, 26, 47, 79, 77, 48, 47, 78, 99, 64]),
        "fv1_pr": ([59, 7, 34, 34, 15, 42, 49, 67, 18, 57], [36, 12, 25, 45, 34, 16, 26, 28, 59, 24]),
        "fv2_e": ([37, 99, 57, 65, 98, 66, 67, 39, 87, 37], [39, 106, 87, 59, 57, 89, 87, 58, 39, 64]),
        "fv2_pr": ([29, 77, 36, 41, 59, 48, 56, 25, 34, 17], [12, 55, 54, 39, 30, 50, 32, 38, 19, 31]),
    },
    2: {
        "fv1_e": ([36, 78, 55, 38, 19, 86, 67, 46, 84, 69], [44, 96, 78, 108, 48, 86, 46, 68, 45, 78]),
        "fv1_pr": ([24, 32, 18, 8, 8, 32, 18, 20, 25, 22], [14, 42, 21, 23, 13, 29, 14, 22, 17, 21]),
        "fv2_e": ([58, 57, 55, 27, 58, 28, 76, 57, 53, 18], [75, 59, 29, 26, 49, 49, 24, 49, 109, 57]),
        "fv2_pr": ([24, 30, 24, 65, 21, 12, 24, 27, 18, 7], [21, 18, 9, 11, 15, 14, 9, 14, 34, 19]),
    },
    3: {
        "fv1_e": ([29, 35, 26, 64, 78, 54, 66, 49, 84, 57], [74, 38, 16, 87, 55, 15, 47, 57, 34, 74]),
        "fv1_pr": ([9, 16, 6, 18, 38, 16, 12, 21, 21, 19], [29, 8, 5, 23, 13, 12, 11, 14, 10, 16]),
        "fv2_e": ([48, 59, 39, 56, 66, 48, 18, 74, 55, 29], [27, 84, 57, 48, 34, 24, 97, 26, 38, 47]),
        "fv2_pr": ([19, 28, 16, 25, 34, 17, 11, 36, 23, 8], [13, 41, 25, 21, 12, 21, 62, 12, 14, 21]),
    },
}

REAL_MODE = {1: "FV1", 2: "FV2", 3: "FV1"}

PUBLISHED_TOTALS = {
    1: {"fv1_eu": 1376, "fv2_eu": 1337, "fv1_pr": 687, "fv2_pr": 782},
    2: {"fv1_eu": 1275, "fv2_eu": 1013, "fv1_pr": 423, "fv2_pr": 252},
    3: {"fv1_eu": 1039, "fv2_eu": 974, "fv1_pr": 317, "fv2_pr": 459},
}

# FV1 total over FV2 total, as printed (two decimals)
PUBLISHED_RATIOS = {
    1: {"eu": 1.03, "pr": 0.87},
    2: {"eu": 1.26, "pr": 1.68},
    3: {"eu": 1.07, "pr": 0.69},
}

# Recognition marks: does the printed table call the decision right?
PUBLISHED_CORRECT = {
    1: {"eu": False, "pr": True},
    2: {"eu": True, "pr": True},
    3: {"eu": False, "pr": True},
}

# (example, prototype, feature index) where the printed corrected distance
# exceeds the printed raw distance
KNOWN_PR_EXCEEDS_E = {(2, "fv2", 3)}
