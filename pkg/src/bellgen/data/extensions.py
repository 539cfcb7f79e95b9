"""Four- and five-party extension recipes for the (3,2,2) catalog.

Each row gives the transform expressions producing the defining
restrictions from the catalog entry (the fourth restriction follows from
the linear completion), the target quantum value where one is on record
as (value, expression, printed_as_decimal), and structural notes.
"""

CATALOG_Q = {
    1: (1, '1', False),
    2: (2, '2', False),
    3: (1.4142135623730951, 'sqrt(2)', False),
    4: (1.8284271247461903, '2*sqrt(2)-1', False),
    5: (1.6295146066661061, '((8*sqrt(5)-13)/(3))', False),
    6: (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
    7: (1.6666666666666667, '((5)/(3))', False),
    8: (1.6666666666666667, '((5)/(3))', False),
    9: (1.4142135623730951, 'sqrt(2)', False),
    10: (1, '1', False),
    11: (1.4142135623730951, 'sqrt(2)', False),
    12: (1.4142135623730951, 'sqrt(2)', False),
    13: (1.4142135623730951, 'sqrt(2)', False),
    14: (1.4142135623730951, 'sqrt(2)', False),
    15: (1.5, '1.5', True),
    16: (1.53, '1.53', True),
    17: (1.4142135623730951, 'sqrt(2)', False),
    18: (1.4384471871911697, '((7-sqrt(17))/(2))', False),
    19: (1.45, '1.45', True),
    20: (1.6213203435596428, '((3*sqrt(2)-1)/(2))', False),
    21: (1.49, '1.49', True),
    22: (1.55, '1.55', True),
    23: (1.1711646096066226, '((3*sqrt(17)-3)/(8))', False),
    24: (1.588, '1.588', True),
    25: (1.36, '1.36', True),
    26: (1.5856406460551018, '((4*sqrt(3)+1)/(5))', False),
    27: (1.39, '1.39', True),
    28: (1.65, '1.65', True),
    29: (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
    30: (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
    31: (1.2761423749153968, '((2*sqrt(2)+1)/(3))', False),
    32: (1.36, '1.36', True),
    33: (1.63, '1.63', True),
    34: (1.38, '1.38', True),
    35: (1.31, '1.31', True),
    36: (1.58, '1.58', True),
    37: (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
    38: (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
    39: (1.55, '1.55', True),
    40: (1.35, '1.35', True),
    41: (1.48, '1.48', True),
    42: (1.63, '1.63', True),
    43: (1.4142135623730951, 'sqrt(2)', False),
    44: (1.6213203435596428, '((3*sqrt(2)-1)/(2))', False),
    45: (1.6213203435596428, '((3*sqrt(2)-1)/(2))', False),
    46: (1.3, '1.3', True),
}

EXTENSIONS = {
    1: {
        1: {
            "pm": 'perm C 2 1',
            "mp": 'perm C 2 1; flip C2',
            "mm": 'flip C1',
            "q": (2.6568542494923806, '4*sqrt(2)-3', False),
        },
    },
    2: {
        1: {
            "pm": 'flip A1',
            "mp": 'flip A2',
            "mm": 'swap A C; flip B1',
            "q": (2, '2', False),
            "notes": ('mp_eq_neg_pm',),
        },
        2: {
            "pm": 'perm C 2 1',
            "mp": 'perm A 2 1; flip B1',
            "mm": 'swap A C; flip B1',
            "q": (2, '2', False),
            "notes": ('mp_eq_neg_pm',),
        },
        3: {
            "pm": 'perm A 2 1; perm B 2 1; perm C 2 1',
            "mp": 'flip A2; perm A 2 1',
            "mm": 'swap A C; flip B1',
            "q": (2.8284271247461903, '2*sqrt(2)', False),
            "notes": ('mp_eq_neg_pm', 'mabk4'),
        },
    },
    3: {
        1: {
            "pm": 'perm C 2 1',
            "mp": 'flip A1; perm B 2 1',
            "mm": 'flip B1; flip C2',
            "q": (1.4142135623730951, 'sqrt(2)', False),
            "notes": ('mp_eq_neg_pm',),
        },
        2: {
            "pm": 'swap A B',
            "mp": 'flip A1; perm B 2 1',
            "mm": 'flip A1; perm B 2 1; swap A B',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
        3: {
            "pm": 'swap A B',
            "mp": 'perm A 2 1; perm B 2 1; flip C',
            "mm": 'perm B 2 1; flip B2; swap A B',
            "q": (2, '2', False),
        },
        4: {
            "pm": 'swap A B',
            "mp": 'swap A B; perm A 2 1; perm B 2 1',
            "mm": 'flip C2; perm B 2 1',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
        5: {
            "pm": 'swap A B',
            "mp": 'swap A B; perm C 2 1',
            "mm": 'perm C 2 1',
            "q": (2, '2', False),
        },
        6: {
            "pm": 'swap A B',
            "mp": 'flip A2; flip B2; swap A B',
            "mm": 'flip B1; flip A1',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
        7: {
            "pm": 'swap A B; flip B2',
            "mp": 'swap A B; flip B1',
            "mm": 'flip B1; flip C2',
            "q": (1.7320508075688772, 'sqrt(3)', False),
            "notes": ('mp_eq_neg_pm',),
        },
        8: {
            "pm": 'flip C1; swap A B; flip B2',
            "mp": 'flip A2; flip B2; swap A B',
            "mm": 'flip B1; flip C2',
            "q": (2, '2', False),
            "notes": ('mp_eq_neg_pm',),
        },
        9: {
            "pm": 'flip B2',
            "mp": 'flip B1',
            "mm": 'flip B1; flip C2',
            "q": (1.4142135623730951, 'sqrt(2)', False),
            "notes": ('mp_eq_neg_pm',),
        },
        10: {
            "pm": 'flip A2',
            "mp": 'flip A1',
            "mm": 'flip B1; flip C2',
            "q": (1.4142135623730951, 'sqrt(2)', False),
            "notes": ('mp_eq_neg_pm',),
        },
        11: {
            "pm": 'flip B1; flip A2',
            "mp": 'swap A B',
            "mm": 'flip C1; swap A B; flip B2',
            "q": (2, '2', False),
        },
        12: {
            "pm": 'flip B1; flip A2',
            "mp": 'flip B1; flip A1',
            "mm": 'flip B1; flip C2',
            "q": (2, '2', False),
            "notes": ('mp_eq_neg_pm',),
        },
        13: {
            "pm": 'flip C1; perm C 2 1',
            "mp": 'flip B2; perm C 2 1',
            "mm": 'flip B1; flip C2',
            "q": (2, '2', False),
            "notes": ('mp_eq_neg_pm',),
        },
    },
    4: {
        1: {
            "pm": 'flip B1',
            "mp": 'perm C 2 1',
            "mm": 'flip B1; perm C 2 1',
            "q": (1.8284271247461903, '2*sqrt(2)-1', False),
        },
        2: {
            "pm": 'flip B1; perm B 2 1',
            "mp": 'perm B 2 1; perm C 2 1',
            "mm": 'flip B1; perm C 2 1',
            "q": (3, '3', False),
        },
        3: {
            "pm": 'perm A 2 1',
            "mp": 'perm A 2 1; flip A2',
            "mm": 'flip A1',
            "q": (2, '2', False),
        },
    },
    5: {
        1: {
            "pm": 'flip A1; perm A 2 1',
            "mp": 'flip A2; perm A 2 1',
            "mm": 'flip A1; flip A2',
            "q": (2.41, '2.41', True),
        },
        2: {
            "pm": 'flip C1; flip C2; perm C 2 1',
            "mp": 'perm C 2 1',
            "mm": 'flip C2; flip C1',
            "q": None,
        },
        3: {
            "pm": 'flip C2',
            "mp": 'perm A 2 1; perm B 2 1; flip C2',
            "mm": 'perm B 2 1; perm A 2 1',
            "q": None,
        },
        4: {
            "pm": 'perm A 2 1; perm B 2 1; flip C1; flip C2',
            "mp": 'flip C2',
            "mm": 'perm B 2 1; flip C1; perm A 2 1',
            "q": (1.6295146066661061, '((8*sqrt(5)-13)/(3))', False),
        },
        5: {
            "pm": 'flip A1',
            "mp": 'flip A2',
            "mm": 'flip A1; flip A2',
            "q": None,
        },
        6: {
            "pm": 'flip C1; flip B2; flip A2',
            "mp": 'flip A1; flip A2; flip B1; flip B2; flip C2',
            "mm": 'flip B1; flip C2; flip C1; flip A1',
            "q": (1.8240453183331933, '((2*sqrt(5)+1)/(3))', False),
        },
    },
    6: {
        1: {
            "pm": 'swap A C; flip B1; flip B2',
            "mp": 'swap A C',
            "mm": 'flip B1; flip B2',
            "q": (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
        },
        2: {
            "pm": 'swap A C',
            "mp": 'swap A C; flip B1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (2.41, '2.41', True),
            "notes": ('q_unreliable',),
        },
    },
    7: {
        1: {
            "pm": 'perm A 2 1; flip B1; flip C1',
            "mp": 'perm B 2 1; perm C 2 1; flip B1; flip C2',
            "mm": 'flip A2; perm B 2 1; perm C 2 1; flip A1; perm A 2 1',
            "q": (1.6666666666666667, '((5)/(3))', False),
        },
        2: {
            "pm": 'perm A 2 1; perm B 2 1; flip A1; flip A2',
            "mp": 'perm C 2 1; flip A1; flip B1',
            "mm": 'perm A 2 1; flip B2; perm C 2 1; perm B 2 1; flip A2',
            "q": (2, '2', False),
        },
    },
    8: {
        1: {
            "pm": 'perm B 2 1; perm C 2 1',
            "mp": 'swap B C; perm A 2 1; perm B 2 1; flip C1',
            "mm": 'swap B C; flip B2; flip C1',
            "q": (1.67, '1.67', True),
        },
        3: {
            "pm": 'perm B 2 1; perm C 2 1; flip C1',
            "mp": 'perm A 2 1; perm C 2 1',
            "mm": 'flip C1; flip C2',
            "q": (2, '2', False),
        },
    },
    9: {
        3: {
            "pm": 'swap A B; flip C2; flip A2; perm C 2 1; perm A 2 1; flip A2',
            "mp": 'perm A 2 1; perm C 2 1; flip C1',
            "mm": 'perm B 2 1; flip A2; perm A 2 1; flip A2; swap A B',
            "q": (2, '2', False),
        },
        4: {
            "pm": 'flip A2; flip A1; swap A B; flip C2; perm C 2 1; perm A 2 1',
            "mp": 'swap A B; flip C2',
            "mm": 'perm A 2 1; perm C 2 1; flip A1; flip A2',
            "q": (1.6666666666666667, '((5)/(3))', False),
        },
    },
    10: {
        1: {
            "pm": 'perm B 2 1; perm C 2 1',
            "mp": 'swap A B; swap A C; flip B1; flip C1',
            "mm": 'swap B C; flip A1',
            "q": None,
        },
        2: {
            "pm": 'perm B 2 1; perm C 2 1',
            "mp": 'swap A C; perm A 2 1; perm C 2 1',
            "mm": 'swap A B; swap A C; flip A1',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
    },
    11: {
        1: {
            "pm": 'perm A 2 1; flip C2',
            "mp": 'perm A 2 1; flip A1; flip A2; flip C1',
            "mm": 'perm A 2 1; perm B 2 1; flip A1; flip A2',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
        2: {
            "pm": 'perm A 2 1; perm B 2 1; flip A1; flip A2',
            "mp": 'swap A B',
            "mm": 'perm A 2 1; perm B 2 1; flip A1; flip B2',
            "q": (2, '2', False),
        },
    },
    12: {
        1: {
            "pm": 'flip C1',
            "mp": 'flip C2',
            "mm": 'swap A B',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
        2: {
            "pm": 'perm C 2 1; flip A1',
            "mp": 'perm C 2 1; flip A2',
            "mm": 'flip A1; flip A2',
            "q": (2, '2', False),
            "notes": ('q_unreliable',),
        },
    },
    13: {
        3: {
            "pm": 'perm C 2 1',
            "mp": 'perm B 2 1; flip C2',
            "mm": 'perm B 2 1; perm C 2 1; flip C1',
            "q": (1.58, '1.58', True),
        },
        5: {
            "pm": 'swap A C',
            "mp": 'perm C 2 1',
            "mm": 'swap A C; perm A 2 1',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
    },
    14: {
        1: {
            "pm": 'perm B 2 1; flip B2',
            "mp": 'perm B 2 1; perm C 2 1',
            "mm": 'perm C 2 1; flip B1',
            "q": (2, '2', False),
        },
        3: {
            "pm": 'perm B 2 1',
            "mp": 'perm B 2 1; perm C 2 1; flip B2',
            "mm": 'perm C 2 1; flip B1',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
    },
    15: {
        1: {
            "pm": 'swap A C; perm A 2 1; perm B 2 1',
            "mp": 'perm B 2 1',
            "mm": 'swap A C; perm A 2 1',
            "q": (1.8284271247461903, '2*sqrt(2)-1', False),
        },
        2: {
            "pm": 'swap A C; perm B 2 1',
            "mp": 'perm A 2 1; perm B 2 1',
            "mm": 'swap A C; perm A 2 1',
            "q": (2.2426406871192857, '3*sqrt(2)-2', False),
        },
    },
    16: {
        3: {
            "pm": 'flip B1; perm B 2 1; flip C1; perm A 2 1; perm C 2 1',
            "mp": 'perm A 2 1; flip B1; flip B2; perm B 2 1; flip C1; perm C 2 1; neg',
            "mm": 'perm A 2 1; flip A1; flip A2; flip B2',
            "q": (1.6666666666666667, '((5)/(3))', False),
        },
        5: {
            "pm": 'flip C1; perm C 2 1; perm B 2 1; flip B2; perm A 2 1',
            "mp": 'perm A 2 1',
            "mm": 'perm B 2 1; perm C 2 1; flip B2; flip C2',
            "q": (1.5666989036012806, '3*sqrt(((3)/(11)))', False),
        },
    },
    17: {
        2: {
            "pm": 'perm C 2 1',
            "mp": 'perm A 2 1; perm C 2 1; flip C2',
            "mm": 'perm A 2 1; flip C1',
            "q": (1.54, '1.54', True),
        },
        5: {
            "pm": 'perm A 2 1; perm B 2 1',
            "mp": 'perm B 2 1; flip B2',
            "mm": 'perm A 2 1; flip B1',
            "q": (2.2426406871192857, '3*sqrt(2)-2', False),
            "notes": ('q_unreliable',),
        },
    },
    18: {
        8: {
            "pm": 'perm A 2 1; flip B1; flip C1',
            "mp": 'flip B2',
            "mm": 'flip B1; flip C1; flip C2',
            "q": None,
        },
        11: {
            "pm": 'perm A 2 1; flip C1',
            "mp": 'flip B2',
            "mm": 'flip C1; flip C2',
            "q": (1.5, '1.5', True),
        },
    },
    19: {
        4: {
            "pm": 'swap B C; perm B 2 1; perm C 2 1',
            "mp": 'swap B C; perm A 2 1; flip C2',
            "mm": 'perm A 2 1; perm B 2 1; perm C 2 1; flip B1',
            "q": (1.5, '1.5', True),
        },
        17: {
            "pm": 'perm B 2 1; flip A2; flip B1; flip B2',
            "mp": 'perm B 2 1; flip A1; flip B1; flip B2',
            "mm": 'flip A1; flip A2',
            "q": (1.6666666666666667, '((5)/(3))', False),
        },
    },
    20: {
        4: {
            "pm": 'flip A1',
            "mp": 'flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.6213203435596428, '((3*sqrt(2)-1)/(2))', False),
        },
        5: {
            "pm": 'perm A 2 1; flip A1',
            "mp": 'perm A 2 1; flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.84, '1.84', True),
        },
    },
    21: {
        2: {
            "pm": 'perm C 2 1; flip C1; flip C2',
            "mp": 'perm C 2 1',
            "mm": 'flip C1; flip C2',
            "q": (1.8284271247461903, '2*sqrt(2)-1', False),
        },
        3: {
            "pm": 'perm C 2 1; flip C2',
            "mp": 'perm C 2 1; flip C1',
            "mm": 'flip C1; flip C2',
            "q": (2.03, '2.03', True),
        },
    },
    22: {
        2: {
            "pm": 'flip C1',
            "mp": 'flip C2',
            "mm": 'flip C1; flip C2',
            "q": (1.55, '1.55', True),
        },
        5: {
            "pm": 'perm C 2 1; flip C1',
            "mp": 'perm C 2 1; flip C2',
            "mm": 'flip C1; flip C2',
            "q": (2.22, '2.22', True),
        },
    },
    23: {
        4: {
            "pm": 'perm A 2 1',
            "mp": 'perm B 2 1',
            "mm": 'perm A 2 1; perm B 2 1',
            "q": (1.1711646096066226, '((3*sqrt(17)-3)/(8))', False),
        },
        5: {
            "pm": 'perm B 2 1; flip B2',
            "mp": 'perm B 2 1; flip B1',
            "mm": 'flip B1; flip B2',
            "q": (1.6937129433613967, '((sqrt(10)+7)/(6))', False),
        },
    },
    24: {
        4: {
            "pm": 'perm C 2 1',
            "mp": 'swap A B',
            "mm": 'swap A B; perm C 2 1',
            "q": (1.588, '1.588', True),
        },
        11: {
            "pm": 'flip A1; flip C2',
            "mp": 'flip A2; flip C2',
            "mm": 'flip A1; flip A2',
            "q": (1.8, '((9)/(5))', False),
        },
    },
    25: {
        2: {
            "pm": 'perm B 2 1',
            "mp": 'perm B 2 1; flip B1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (1.6627416997969522, '((8*sqrt(2)-3)/(5))', False),
        },
        3: {
            "pm": 'swap B C; perm C 2 1',
            "mp": 'swap B C; perm C 2 1; flip C1; flip C2',
            "mm": 'flip C1; flip C2',
            "q": (0.6521739130434783, '((15)/(23))', False),
        },
    },
    26: {
        1: {
            "pm": 'flip B1',
            "mp": 'swap A C',
            "mm": 'swap A C; flip B1',
            "q": (1.5856406460551018, '((4*sqrt(3)+1)/(5))', False),
        },
        3: {
            "pm": 'perm A 2 1; flip A1',
            "mp": 'perm A 2 1; flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.6627416997969522, '((8*sqrt(2)-3)/(5))', False),
        },
    },
    27: {
        5: {
            "pm": 'perm C 2 1',
            "mp": 'perm C 2 1; flip C1; flip C2',
            "mm": 'flip C1; flip C2',
            "q": None,
        },
        6: {
            "pm": 'perm B 2 1',
            "mp": 'perm B 2 1; flip B1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (1.6627416997969522, '((8*sqrt(2)-3)/(5))', False),
        },
    },
    28: {
        10: {
            "pm": 'flip B1; flip B2; flip C2',
            "mp": 'flip C2',
            "mm": 'flip B1; flip B2',
            "q": (1.7551881456915457, '((sqrt(65)+13)/(12))', False),
        },
        14: {
            "pm": 'flip B2; flip C2',
            "mp": 'flip B2; flip C1',
            "mm": 'flip C1; flip C2',
            "q": (2.3333333333333335, '((7)/(3))', False),
        },
    },
    29: {
        16: {
            "pm": 'perm B 2 1; flip C1',
            "mp": 'perm A 2 1; perm B 2 1; flip C1',
            "mm": 'perm A 2 1',
            "q": None,
        },
        18: {
            "pm": 'perm B 2 1',
            "mp": 'perm B 2 1; flip B1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
        },
    },
    30: {
        40: {
            "pm": 'perm C 2 1; flip A1; flip A2; flip B1',
            "mp": 'perm C 2 1; flip B1',
            "mm": 'flip A1; flip A2',
            "q": (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
        },
        53: {
            "pm": 'perm A 2 1; flip A1; flip A2',
            "mp": 'perm A 2 1',
            "mm": 'flip A1; flip A2',
            "q": (1.59, '1.59', True),
        },
    },
    31: {
        162: {
            "pm": 'perm C 2 1; flip B1; flip B2',
            "mp": 'swap A B; perm C 2 1',
            "mm": 'swap A B; flip B1; flip B2',
            "q": (1.2761423749153968, '((2*sqrt(2)+1)/(3))', False),
        },
        236: {
            "pm": 'swap A B; perm B 2 1; flip C2',
            "mp": 'swap A B',
            "mm": 'perm A 2 1; flip C2',
            "q": (1.55, '1.55', True),
        },
    },
    32: {
        12: {
            "pm": 'perm C 2 1; flip C2',
            "mp": 'perm C 2 1; flip C1',
            "mm": 'flip C1; flip C2',
            "q": (1.87, '1.87', True),
        },
        13: {
            "pm": 'perm C 2 1; flip C1; flip C2',
            "mp": 'perm C 2 1',
            "mm": 'flip C1; flip C2',
            "q": (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
        },
    },
    33: {
        8: {
            "pm": 'perm C 2 1',
            "mp": 'perm C 2 1; flip C1; flip C2',
            "mm": 'flip C1; flip C2',
            "q": (1.65, '1.65', True),
        },
        9: {
            "pm": 'perm C 2 1; flip C1',
            "mp": 'perm C 2 1; flip C2',
            "mm": 'flip C1; flip C2',
            "q": (2.32, '2.32', True),
        },
    },
    34: {
        17: {
            "pm": 'perm C 2 1; flip C2',
            "mp": 'perm C 2 1; flip C1',
            "mm": 'flip C1; flip C2',
            "q": (1.98, '1.98', True),
        },
        19: {
            "pm": 'flip A1',
            "mp": 'flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.38, '1.38', True),
        },
    },
    35: {
        40: {
            "pm": 'flip C2',
            "mp": 'perm B 2 1; flip C2',
            "mm": 'perm B 2 1',
            "q": None,
        },
        53: {
            "pm": 'flip A1',
            "mp": 'flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.31, '1.31', True),
        },
    },
    36: {
        164: {
            "pm": 'flip C2',
            "mp": 'flip C1',
            "mm": 'flip C1; flip C2',
            "q": (1.58, '1.58', True),
        },
        212: {
            "pm": 'perm B 2 1; flip B2',
            "mp": 'perm B 2 1; flip B1',
            "mm": 'flip B1; flip B2',
            "q": (2.3333333333333335, '((7)/(3))', False),
        },
    },
    37: {
        35: {
            "pm": 'flip B1',
            "mp": 'flip B2',
            "mm": 'flip B1; flip B2',
            "q": None,
        },
        44: {
            "pm": 'perm C 2 1; flip B1',
            "mp": 'perm C 2 1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
        },
    },
    38: {
        23: {
            "pm": 'perm B 2 1; perm C 2 1',
            "mp": 'perm B 2 1; flip B2',
            "mm": 'perm C 2 1; flip B1',
            "q": (2.3333333333333335, '((7)/(3))', False),
        },
        55: {
            "pm": 'flip B1',
            "mp": 'perm C 2 1',
            "mm": 'perm C 2 1; flip B1',
            "q": (1.5522847498307935, '((4*sqrt(2)-1)/(3))', False),
        },
    },
    39: {
        5: {
            "pm": 'flip A1',
            "mp": 'flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.55, '1.55', True),
        },
        13: {
            "pm": 'perm A 2 1; flip A2',
            "mp": 'perm A 2 1; flip A1',
            "mm": 'flip A1; flip A2',
            "q": (2.24, '2.24', True),
        },
    },
    40: {
        13: {
            "pm": 'perm A 2 1; flip A1',
            "mp": 'perm A 2 1; flip A2',
            "mm": 'flip A1; flip A2',
            "q": (1.7551881456915457, '((13+sqrt(65))/(12))', False),
        },
        23: {
            "pm": 'perm C 2 1; flip C2',
            "mp": 'perm A 2 1; perm C 2 1',
            "mm": 'perm A 2 1; flip C1',
            "q": (1.8989794855663558, '2*sqrt(6)-3', False),
        },
    },
    41: {
        4: {
            "pm": 'flip C2',
            "mp": 'flip C1',
            "mm": 'flip C1; flip C2',
            "q": (1.48, '1.48', True),
        },
        17: {
            "pm": 'perm A 2 1; flip A1',
            "mp": 'perm A 2 1; flip A2',
            "mm": 'flip A1; flip A2',
            "q": (2.142857142857143, '((15)/(7))', False),
        },
    },
    42: {
        10: {
            "pm": 'flip A1',
            "mp": 'swap B C',
            "mm": 'swap B C; flip A1',
            "q": (1.66, '1.66', True),
        },
        14: {
            "pm": 'flip A2',
            "mp": 'flip A1',
            "mm": 'flip A1; flip A2',
            "q": (1.63, '1.63', True),
        },
    },
    43: {
        4: {
            "pm": 'perm B 2 1; flip B1',
            "mp": 'perm B 2 1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (2.042534345788693, '((25+sqrt(577))/(24))', False),
        },
        107: {
            "pm": 'flip B2',
            "mp": 'flip B1',
            "mm": 'flip B1; flip B2',
            "q": (1.4142135623730951, 'sqrt(2)', False),
        },
    },
    44: {
        11: {
            "pm": 'perm C 2 1',
            "mp": 'flip B1',
            "mm": 'perm C 2 1; flip B1',
            "q": (1.6213203435596428, '((3*sqrt(2)-1)/(2))', False),
        },
        17: {
            "pm": 'perm A 2 1; flip A2',
            "mp": 'perm A 2 1; flip A1',
            "mm": 'flip A1; flip A2',
            "q": (1.95, '1.95', True),
        },
    },
    45: {
        6: {
            "pm": 'perm C 2 1; flip C2',
            "mp": 'perm C 2 1; flip C1',
            "mm": 'flip C1; flip C2',
            "q": (2.5, '((5)/(2))', False),
        },
        40: {
            "pm": 'flip B1',
            "mp": 'flip B2',
            "mm": 'flip B1; flip B2',
            "q": (1.6213203435596428, '((3*sqrt(2)-1)/(2))', False),
        },
    },
    46: {
        1: {
            "pm": 'flip C2',
            "mp": 'flip C1',
            "mm": 'flip C1; flip C2',
            "q": (1.3, '1.3', True),
        },
        3: {
            "pm": 'perm B 2 1; flip B1',
            "mp": 'perm B 2 1; flip B2',
            "mm": 'flip B1; flip B2',
            "q": (1.906225774829855, '((11+sqrt(65))/(10))', False),
        },
    },
}

FIVE_PARTY = {
    1: {
        "pm": 'swap A C; flip A1; flip C1',
        "mp": 'flip A1; flip C2',
        "mm": 'swap A C; flip A1; flip A2',
        "q": (2.01, '2.01', True),
    },
    117: {
        "pm": 'perm C 2 1; flip D1',
        "mp": 'swap A B; perm C 2 1',
        "mm": 'swap A B; flip D1',
        "q": (2, '2', False),
    },
}
