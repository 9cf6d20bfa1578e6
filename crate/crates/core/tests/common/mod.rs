//! Tables of exact counts shared by the integration tests.

#![allow(dead_code)]

pub const R3: [&str; 6] = [
    "0",
    r"({q}^{6}+2\,{q}^{5}+3\,{q}^{4}+3\,{q}^{3}+2{q}^{2}+q)/2",
    r"(3\,{q}^{12}+6\,{q}^{11}+9\,{q}^{10}+8\,{q}^{9}+6\,{q}^{8}+3\,{q}^{7}-{q}^{6}-3\,{q}^{5}-3\,{q}^{4}+{q}^{2}+q)/3",
    r"(4\,{q}^{22}+8\,{q}^{21}+12\,{q}^{20}+12\,{q}^{19}+14\,{q}^{18}+16\,{q}^{17}
      +18\,{q}^{16}+16\,{q}^{15}+10\,{q}^{14}
      - 13 \,{q}^{12} -20\, {q}^{11}- 20\,{q}^{10}-10\,{q}^{9}- {q}^{8}+ 6\,{q}^{7}+7\,{q}^{6}+4\, {q}^{5}-2\,{q}^{3}-{q}^{2})/4",
    r"(5\,{q}^{37}+10\,{q}^{36}+15\,{q}^{35}+15\,{q}^{34}+15\,{q}^{33}+15\,{q}^{32}+15\,{q}^{31}+15\,{q}^{30}+15\,{q}^{29}
      +20\,{q}^{28}+25\,{q}^{27}+30\,{q}^{26}+30\,{q}^{25}+25\,{q}^{24}+15\,{q}^{23}-15\,{q}^{21}-30\,{q}^{20}
      -45\,{q}^{19}-60\,{q}^{18}-65\,{q}^{17}-55\,{q}^{16}-26\,{q}^{15}+10\,{q}^{14}+40\,{q}^{13}+50\,{q}^{12}
      +40\,{q}^{11}+19\,{q}^{10}-10\,{q}^{8}-10\,{q}^{7}-5\,{q}^{6}-{q}^{5}+{q}^{3}+{q}^{2}+q)/5",
    r"( 6\,{q}^{58}+12\,{q}^{57}+18\,{q}^{56}+18\,{q}^{55}+18\,{q}^{54}+18\,{q}^{53}+18\,{q}^{52}+18\,{q}^{51}+18\,{q}^{50}
      +18\,{q}^{49}+18\,{q}^{48}+18\,{q}^{47}+18\,{q}^{46}+18\,{q}^{45}+18\,{q}^{44}+24\,{q}^{43}+30\,{q}^{42}
      +36\,{q}^{41}+36\,{q}^{40}+30\,{q}^{39}+21\,{q}^{38}+6\,{q}^{37}-3\,{q}^{36}-6\,{q}^{35}-3\,{q}^{34}+3\,{q}^{32}
      -6\,{q}^{31}-27\,{q}^{30}-60\,{q}^{29}-99\,{q}^{28}-128\,{q}^{27}-141\,{q}^{26}-132\,{q}^{25}-104\,{q}^{24}
      -60\,{q}^{23}-3\,{q}^{22}+70\,{q}^{21}+144\,{q}^{20}+201\,{q}^{19}+203\,{q}^{18}+147\,{q}^{17}+51\,{q}^{16}
      -45\,{q}^{15}-102\,{q}^{14}-105\,{q}^{13}-71\,{q}^{12}-27\,{q}^{11}+3\,{q}^{10}+14\,{q}^{9}+11\,{q}^{8}
      +5\,{q}^{7}+3\,{q}^{6}+3\,{q}^{5}+2\,{q}^{4}-2\,{q}^{3}-2\,{q}^{2}-q)/6",
];

pub const Q_2_3: [(usize, &str); 4] = [
    (4, r"{q}^{4}+2\,{q}^{3}+{q}^{2}"),
    (5, r"{q}^{7}+2\,{q}^{6}+2\,{q}^{5}+{q}^{4}"),
    (6, r"{q}^{11}+2\,{q}^{10}+2\,{q}^{9}+2\,{q}^{8}+{q}^{7}+{q}^{5}-{q}^{3}-{q}^{2}"),
    (7, r"{q}^{16}+2\,{q}^{15}+2\,{q}^{14}+2\,{q}^{13}+2\,{q}^{12}+{q}^{11}+{q}^{7}+{q}^{6}-{q}^{5}-2\,{q}^{4}-{q}^{3}"),
];

pub const Q_3_2: [(usize, &str); 2] = [
    (3, r"{q}^{6}+2\,{q}^{5}+3\,{q}^{4}+2\,{q}^{3}+{q}^{2}"),
    (4, r"{q}^{12}+2\,{q}^{11}+3\,{q}^{10}+4\,{q}^{9}+4\,{q}^{8}+4\,{q}^{7}+2\,{q}^{6}-2\,{q}^{4}-2\,{q}^{3}-{q}^{2}"),
];

pub const Q_3_3: [(usize, &str); 2] = [
    (4, r"{q}^{6}+2\,{q}^{5}+3\,{q}^{4}+2\,{q}^{3}+{q}^{2}"),
    (5, r"{q}^{12}+2\,{q}^{11}+3\,{q}^{10}+3\,{q}^{9}+3\,{q}^{8}+3\,{q}^{7}+2\,{q}^{6}+{q}^{5}"),
];

pub const E2: [&str; 6] = [
    "0",
    r"1/2\,{q}^{4}-1/2\,q",
    r"1/3\,{q}^{6}+1/3\,{q}^{3}-1/3\,{q}^{2}-1/3\,q",
    r"1/2\,{q}^{10}+1/4\,{q}^{8}-1/2\,{q}^{5}-1/2\,{q}^{4}+1/4\,{q}^{2}",
    r"1/5\,{q}^{10}+1/5\,{q}^{5}-1/5\,{q}^{2}-1/5\,q",
    r"1/2\,{q}^{18}+1/2\,{q}^{16}+1/3\,{q}^{15}-1/3\,{q}^{12}-1/2\,{q}^{10}-1/2\,{q}^{9}-1/2\,{q}^{8}+1/6\,{q}^{6}
      +1/6\,{q}^{5}-1/6\,{q}^{4}-1/6\, {q}^{3}+1/3\,{q}^{2}+1/6\,q",
];

pub const E3: [(usize, &str); 4] = [
    (2, r"1/2\,{q}^{6}+1/2\,{q}^{4}-1/2\,{q}^{3}-1/2\,q"),
    (3, r"1/3\,{q}^{9}+1/3\,{q}^{6}-1/3\,{q}^{2}-1/3\,q"),
    (4, r"1/2\,{q}^{18}+1/2\,{q}^{16}+1/2\,{q}^{14}+1/4\,{q}^{12}-1/2\,{q}^{9}-3/4\,{q}^{8}-1/2\,{q}^{7}-3/4\,{q}^{6}
      +1/2\,{q}^{3}+1/4\,{q}^{2}"),
    (5, r"1/5\,{q}^{15}+1/5\,{q}^{10}+1/5\,{q}^{5}-1/5\,{q}^{3}-1/5\,{q}^{2}-1/5 \,q"),
];
