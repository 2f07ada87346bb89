"""Shortest differential addition chains as move strings.

Generated by tools/gen_chain_table.py; do not edit by hand.
"""

CHAIN_OPS = {
    3: 'DA',
    5: 'DAA',
    7: 'DABA',
    11: 'DAABA',
    13: 'DAAAA',
    17: 'DABABA',
    19: 'DAABAA',
    23: 'DAAABBA',
    29: 'DAAAABA',
    31: 'DAAABAA',
    37: 'DAAAABBA',
    41: 'DAAABBAA',
    43: 'DABAAABA',
    47: 'DAAAAABA',
    53: 'DAABBAABA',
    59: 'DAAABBABA',
    61: 'DAABBABAA',
    67: 'DAAABAABA',
    71: 'DAAAABABA',
    73: 'DAABABAAA',
    79: 'DAAAABAAA',
    83: 'DAABBABBAA',
    89: 'DAAAAAAAA',
    97: 'DAAAAAABBA',
    101: 'DAAABABBAA',
    103: 'DAAAABBAAA',
    107: 'DAAAAABBAA',
    109: 'DAABAAAABA',
    113: 'DAAAABABBBA',
    127: 'DAAAABBBAAA',
    131: 'DAAAAAABAA',
    137: 'DAAAABAABBA',
    139: 'DAABAAAABBA',
    149: 'DAAAAABABBA',
    151: 'DAAABBAABAA',
    157: 'DAAAAAAABBA',
    163: 'DAAAABABBAA',
    167: 'DAAAAABBAAA',
    173: 'DAAAAAABBAA',
    179: 'DAAAABAAABA',
    181: 'DAAABABABAA',
    191: 'DAAABAAABAA',
    193: 'DABAAAAABAA',
    197: 'DAAABABBBAAA',
    199: 'DAAAAAAAABA',
    211: 'DAABABAAABBA',
    223: 'DAABAAABBABA',
    227: 'DAAAAABBAABA',
    229: 'DAAAABAAABBA',
    233: 'DAAAAAAAAAA',
    239: 'DABAAABBABAA',
    241: 'DAAAAAABABBA',
    251: 'DAAABBAAABAA',
    257: 'DABAAAABAABA',
    263: 'DAAAABABAABA',
    269: 'DAAABABAAABA',
    271: 'DAAABAAABABA',
    277: 'DAAAAABABABA',
    281: 'DAAABAABABAA',
    283: 'DAAAAAABAABA',
    293: 'DABAAAAAAABA',
    307: 'DAAABAAAABAA',
    311: 'DAAAAABABAAA',
    313: 'DAAAABABAAAA',
    317: 'DAAAAAABABAA',
    331: 'DAAABABABABBA',
    337: 'DAAAAABAAAAA',
    347: 'DAAAABABBAABA',
    349: 'DAAABABABBABA',
    353: 'DAAAABAABBABA',
    359: 'DAAAAAABAABBA',
    367: 'DAAAAAABBAABA',
    373: 'DAAABABBAABAA',
    587: 'DAAAABAAABBABA',
}
