"""A published 20-tuple of Heron triangles sharing perimeter and area.

All twenty rows have perimeter 6111518179503708972000 and area
1340792724147847711994993266314426038400000; the verify subcommand and the
acceptance suite recheck both exactly, row by row.
"""

TWENTY_TUPLE_PERIMETER = 6111518179503708972000
TWENTY_TUPLE_AREA = 1340792724147847711994993266314426038400000

TWENTY_TUPLE_ROWS = (
    (1154397878350700583600, 2324466316136026062000, 2632653985016982326400),
    (1096939160423742636000, 2485350726331508315280, 2529228292748458020720),
    (1353301222256224441200, 2044007602377661720800, 2714209354869822810000),
    (1326882629217053462400, 2076293397636039582000, 2708342152650615927600),
    (1175291957596867110000, 2287901677455234640800, 2648324544451607221200),
    (1392068029775844821400, 1997996327914674087000, 2721453821813190063600),
    (1664717974861560418800, 1703885276761144351875, 2742914927881004201325),
    (1159621398162242215200, 2314969007387768550000, 2636927773953698206800),
    (1582886815525601586000, 1787918651729320350240, 2740712712248787035760),
    (1363338670812365847600, 2031949206689694692400, 2716230302001648432000),
    (1629738181200989059200, 1739432097243363322800, 2742347901059356590000),
    (1958819929328111850000, 1426020908550865426800, 2726677341624731695200),
    (2256059203526140412400, 1195069414854334519500, 2660389561123234040100),
    (2227944754401017652000, 1213597769548172408400, 2669975655554518911600),
    (2005582596002614412784, 1385590865209533198216, 2720344718291561361000),
    (2462169105650632177800, 1100472310428896790000, 2548876763424180004200),
    (2198208931289532607600, 1234160196742812482000, 2679149051471363882400),
    (2440795514101169425200, 1105486738297174396800, 2565235927105365150000),
    (2469616851505228370400, 1099107024377149242000, 2542794303621331359600),
    (2623055767363274578335, 1143817472264343917040, 2344644939876090476625),
)
