/// Term table of F1 in source order: exponents of (s2, s3, s4) and coefficient.
pub(crate) const F1_TABLE: [([u32; 3], i64); 116] = [
    ([13, 0, 0], 1024),
    ([12, 1, 0], -256),
    ([12, 0, 0], 1536),
    ([11, 1, 0], -8448),
    ([11, 0, 1], 2560),
    ([10, 2, 0], 1664),
    ([10, 1, 1], -512),
    ([9, 3, 0], 64),
    ([11, 0, 0], 33600),
    ([10, 1, 0], -48720),
    ([10, 0, 1], 10752),
    ([9, 2, 0], 37696),
    ([9, 1, 1], -20928),
    ([9, 0, 2], 2560),
    ([8, 3, 0], -4448),
    ([8, 2, 1], 3008),
    ([8, 1, 2], -384),
    ([7, 4, 0], -432),
    ([7, 3, 1], 96),
    ([6, 5, 0], -4),
    ([10, 0, 0], 20000),
    ([9, 1, 0], -140000),
    ([9, 0, 1], 84000),
    ([8, 2, 0], 172600),
    ([8, 1, 1], -139200),
    ([8, 0, 2], 21120),
    ([7, 3, 0], -71680),
    ([7, 2, 1], 78368),
    ([7, 1, 2], -20736),
    ([7, 0, 3], 1280),
    ([6, 4, 0], 2288),
    ([6, 3, 1], -6200),
    ([6, 2, 2], 2016),
    ([6, 1, 3], -128),
    ([5, 5, 0], 1256),
    ([5, 4, 1], -568),
    ([5, 3, 2], 48),
    ([4, 6, 0], 26),
    ([4, 5, 1], -4),
    ([8, 0, 1], 50000),
    ([7, 2, 0], 80000),
    ([7, 1, 1], -280000),
    ([7, 0, 2], 84000),
    ([6, 3, 0], -140000),
    ([6, 2, 1], 345500),
    ([6, 1, 2], -156600),
    ([6, 0, 3], 19200),
    ([5, 4, 0], 30000),
    ([5, 3, 1], -107520),
    ([5, 2, 2], 61008),
    ([5, 1, 3], -10272),
    ([5, 0, 4], 320),
    ([4, 5, 0], 8060),
    ([4, 4, 1], -204),
    ([4, 3, 2], -2628),
    ([4, 2, 3], 592),
    ([4, 1, 4], -16),
    ([3, 6, 0], -1464),
    ([3, 5, 1], 1256),
    ([3, 4, 2], -244),
    ([3, 3, 3], 8),
    ([2, 7, 0], -72),
    ([2, 6, 1], 21),
    ([2, 5, 2], -1),
    ([6, 0, 2], 50000),
    ([5, 2, 1], 120000),
    ([5, 1, 2], -210000),
    ([5, 0, 3], 42000),
    ([4, 4, 0], 40000),
    ([4, 3, 1], -210000),
    ([4, 2, 2], 259350),
    ([4, 1, 3], -87000),
    ([4, 0, 4], 9120),
    ([3, 4, 1], 30000),
    ([3, 3, 2], -53760),
    ([3, 2, 3], 21080),
    ([3, 1, 4], -2544),
    ([3, 0, 5], 32),
    ([2, 6, 0], -3600),
    ([2, 5, 1], 8060),
    ([2, 4, 2], -1920),
    ([2, 3, 3], -202),
    ([2, 2, 4], 64),
    ([1, 6, 1], -732),
    ([1, 5, 2], 314),
    ([1, 4, 3], -34),
    ([0, 8, 0], 81),
    ([0, 7, 1], -36),
    ([0, 6, 2], 4),
    ([4, 0, 3], 25000),
    ([3, 2, 2], 60000),
    ([3, 1, 3], -70000),
    ([3, 0, 4], 10500),
    ([2, 4, 1], 40000),
    ([2, 3, 2], -105000),
    ([2, 2, 3], 86525),
    ([2, 1, 4], -23925),
    ([2, 0, 5], 2208),
    ([1, 4, 2], 7500),
    ([1, 3, 3], -8960),
    ([1, 2, 4], 2728),
    ([1, 1, 5], -252),
    ([0, 6, 1], -1800),
    ([0, 5, 2], 2015),
    ([0, 4, 3], -623),
    ([0, 3, 4], 59),
    ([2, 0, 4], 6250),
    ([1, 2, 3], 10000),
    ([1, 1, 4], -8750),
    ([1, 0, 5], 1050),
    ([0, 4, 2], 10000),
    ([0, 3, 3], -17500),
    ([0, 2, 4], 10825),
    ([0, 1, 5], -2610),
    ([0, 0, 6], 216),
    ([0, 0, 5], 625),
];
