// Asymptotic trace-test quantiles, generated by tools/gen_trace_tables
// (100000 replications, 2000-step discretization). Do not edit by hand.
#pragma once

namespace cvar::tables {

inline constexpr int kTraceCases = 5;
inline constexpr int kTraceMaxDim = 8;
inline constexpr int kTraceProbs = 101;

inline constexpr double kTraceProbGrid[kTraceProbs] = {
    0.010, 0.020, 0.030, 0.040, 0.050, 0.060, 0.070, 0.080, 0.090, 0.100,
    0.110, 0.120, 0.130, 0.140, 0.150, 0.160, 0.170, 0.180, 0.190, 0.200,
    0.210, 0.220, 0.230, 0.240, 0.250, 0.260, 0.270, 0.280, 0.290, 0.300,
    0.310, 0.320, 0.330, 0.340, 0.350, 0.360, 0.370, 0.380, 0.390, 0.400,
    0.410, 0.420, 0.430, 0.440, 0.450, 0.460, 0.470, 0.480, 0.490, 0.500,
    0.510, 0.520, 0.530, 0.540, 0.550, 0.560, 0.570, 0.580, 0.590, 0.600,
    0.610, 0.620, 0.630, 0.640, 0.650, 0.660, 0.670, 0.680, 0.690, 0.700,
    0.710, 0.720, 0.730, 0.740, 0.750, 0.760, 0.770, 0.780, 0.790, 0.800,
    0.810, 0.820, 0.830, 0.840, 0.850, 0.860, 0.870, 0.880, 0.890, 0.900,
    0.910, 0.920, 0.930, 0.940, 0.950, 0.960, 0.970, 0.980, 0.990, 0.995,
    0.999, 
};

inline constexpr double kTraceQuantiles[kTraceCases][kTraceMaxDim][kTraceProbs] = {
    {   // case 0
        {0.0003, 0.0010, 0.0021, 0.0037, 0.0059, 0.0086, 0.0117, 0.0152,
         0.0193, 0.0236, 0.0287, 0.0342, 0.0402, 0.0466, 0.0533, 0.0605,
         0.0686, 0.0762, 0.0847, 0.0947, 0.1051, 0.1151, 0.1258, 0.1371,
         0.1489, 0.1612, 0.1741, 0.1874, 0.2008, 0.2151, 0.2300, 0.2453,
         0.2609, 0.2768, 0.2928, 0.3100, 0.3274, 0.3462, 0.3641, 0.3821,
         0.4003, 0.4205, 0.4412, 0.4626, 0.4836, 0.5057, 0.5290, 0.5523,
         0.5758, 0.5998, 0.6248, 0.6522, 0.6775, 0.7037, 0.7305, 0.7603,
         0.7894, 0.8195, 0.8525, 0.8854, 0.9196, 0.9537, 0.9886, 1.0228,
         1.0598, 1.1004, 1.1412, 1.1835, 1.2281, 1.2751, 1.3222, 1.3727,
         1.4254, 1.4780, 1.5370, 1.5984, 1.6619, 1.7302, 1.8020, 1.8791,
         1.9574, 2.0407, 2.1333, 2.2264, 2.3267, 2.4384, 2.5574, 2.6785,
         2.8152, 2.9722, 3.1352, 3.3291, 3.5444, 3.8115, 4.1372, 4.4940,
         4.9736, 5.6519, 6.8091, 7.9757, 11.1154, },
        {1.2577, 1.5155, 1.7081, 1.8658, 2.0085, 2.1295, 2.2488, 2.3514,
         2.4536, 2.5534, 2.6436, 2.7330, 2.8172, 2.9055, 2.9827, 3.0634,
         3.1388, 3.2117, 3.2865, 3.3598, 3.4322, 3.4983, 3.5642, 3.6348,
         3.7088, 3.7782, 3.8467, 3.9165, 3.9853, 4.0547, 4.1263, 4.1975,
         4.2678, 4.3365, 4.4030, 4.4716, 4.5416, 4.6087, 4.6794, 4.7512,
         4.8233, 4.8946, 4.9671, 5.0354, 5.1095, 5.1823, 5.2548, 5.3281,
         5.3997, 5.4711, 5.5450, 5.6217, 5.6998, 5.7779, 5.8607, 5.9468,
         6.0312, 6.1162, 6.1997, 6.2892, 6.3736, 6.4597, 6.5490, 6.6418,
         6.7384, 6.8369, 6.9344, 7.0337, 7.1393, 7.2482, 7.3517, 7.4610,
         7.5753, 7.6955, 7.8139, 7.9397, 8.0627, 8.2012, 8.3396, 8.4881,
         8.6375, 8.8032, 8.9704, 9.1528, 9.3301, 9.5352, 9.7349, 9.9550,
         10.1976, 10.4549, 10.7472, 11.0685, 11.4132, 11.8134, 12.3243, 12.8818,
         13.6251, 14.6574, 16.3705, 17.9884, 21.7723, },
        {6.1372, 6.8364, 7.3210, 7.6667, 7.9935, 8.2782, 8.5271, 8.7721,
         8.9820, 9.1786, 9.3769, 9.5538, 9.7264, 9.8829, 10.0411, 10.1941,
         10.3423, 10.4856, 10.6203, 10.7669, 10.9008, 11.0323, 11.1640, 11.2943,
         11.4196, 11.5475, 11.6778, 11.8036, 11.9260, 12.0515, 12.1717, 12.2950,
         12.4193, 12.5360, 12.6489, 12.7618, 12.8840, 13.0004, 13.1279, 13.2444,
         13.3626, 13.4794, 13.5943, 13.7112, 13.8304, 13.9503, 14.0746, 14.1894,
         14.3068, 14.4308, 14.5574, 14.6807, 14.8012, 14.9264, 15.0533, 15.1810,
         15.3116, 15.4451, 15.5759, 15.7078, 15.8362, 15.9712, 16.1041, 16.2451,
         16.3842, 16.5263, 16.6743, 16.8205, 16.9737, 17.1293, 17.2926, 17.4465,
         17.6219, 17.7915, 17.9669, 18.1551, 18.3462, 18.5394, 18.7351, 18.9472,
         19.1651, 19.3897, 19.6243, 19.8738, 20.1428, 20.4223, 20.7211, 21.0128,
         21.3531, 21.7109, 22.0954, 22.5299, 23.0150, 23.5609, 24.2018, 24.9733,
         25.9526, 27.3384, 29.4820, 31.6259, 36.5616, },
        {15.0840, 16.1991, 16.9751, 17.5697, 18.0546, 18.4695, 18.8644, 19.2126,
         19.5350, 19.8396, 20.1228, 20.4059, 20.6525, 20.8925, 21.1286, 21.3570,
         21.5747, 21.7757, 21.9848, 22.1951, 22.3825, 22.5841, 22.7709, 22.9609,
         23.1372, 23.3221, 23.5179, 23.7112, 23.8879, 24.0547, 24.2354, 24.4114,
         24.5772, 24.7415, 24.9011, 25.0690, 25.2339, 25.4043, 25.5638, 25.7256,
         25.8995, 26.0595, 26.2160, 26.3847, 26.5538, 26.7148, 26.8727, 27.0351,
         27.1902, 27.3693, 27.5434, 27.7150, 27.8853, 28.0586, 28.2317, 28.4021,
         28.5725, 28.7517, 28.9408, 29.1275, 29.3112, 29.4908, 29.6864, 29.8871,
         30.0763, 30.2607, 30.4587, 30.6560, 30.8747, 31.0919, 31.3090, 31.5270,
         31.7556, 31.9813, 32.2144, 32.4477, 32.7026, 32.9546, 33.2147, 33.4834,
         33.7650, 34.0666, 34.3595, 34.6713, 35.0321, 35.3807, 35.7502, 36.1433,
         36.5498, 37.0508, 37.5313, 38.0693, 38.6886, 39.3700, 40.2101, 41.1313,
         42.2379, 43.8020, 46.3326, 49.0557, 54.5028, },
        {28.0710, 29.6219, 30.6570, 31.4972, 32.1291, 32.7262, 33.2503, 33.7121,
         34.1384, 34.5391, 34.9152, 35.2680, 35.6157, 35.9441, 36.2476, 36.5313,
         36.8156, 37.0876, 37.3649, 37.6265, 37.8996, 38.1626, 38.4027, 38.6498,
         38.8724, 39.1161, 39.3501, 39.5900, 39.8053, 40.0206, 40.2375, 40.4615,
         40.6838, 40.9023, 41.1313, 41.3378, 41.5428, 41.7606, 41.9785, 42.1916,
         42.4019, 42.5978, 42.8052, 43.0095, 43.2266, 43.4298, 43.6361, 43.8366,
         44.0262, 44.2385, 44.4470, 44.6511, 44.8683, 45.0888, 45.3079, 45.5201,
         45.7580, 45.9819, 46.2043, 46.4163, 46.6466, 46.8792, 47.1166, 47.3490,
         47.5893, 47.8354, 48.0801, 48.3231, 48.5776, 48.8538, 49.1230, 49.3820,
         49.6614, 49.9392, 50.2290, 50.5232, 50.8251, 51.1320, 51.4600, 51.7957,
         52.1445, 52.5222, 52.8948, 53.2781, 53.6833, 54.1135, 54.5665, 55.0454,
         55.5543, 56.1101, 56.7292, 57.3745, 58.1028, 58.9078, 59.8702, 60.9699,
         62.2952, 64.2020, 67.3466, 70.3720, 76.8557, },
        {44.7666, 46.8742, 48.2097, 49.2388, 50.0457, 50.7706, 51.4353, 52.0358,
         52.6125, 53.1090, 53.5626, 53.9932, 54.4346, 54.8486, 55.2505, 55.6249,
         55.9924, 56.3366, 56.6683, 57.0038, 57.3471, 57.6698, 57.9889, 58.3046,
         58.5987, 58.8799, 59.1691, 59.4558, 59.7334, 60.0101, 60.3041, 60.5803,
         60.8600, 61.1247, 61.3906, 61.6424, 61.8979, 62.1513, 62.3926, 62.6346,
         62.8883, 63.1433, 63.3974, 63.6594, 63.9100, 64.1727, 64.4256, 64.6619,
         64.9166, 65.1770, 65.4307, 65.6930, 65.9459, 66.1959, 66.4514, 66.7078,
         66.9735, 67.2367, 67.5119, 67.7781, 68.0404, 68.3333, 68.6131, 68.8865,
         69.1637, 69.4534, 69.7415, 70.0574, 70.3637, 70.6718, 70.9979, 71.3169,
         71.6380, 71.9689, 72.3091, 72.6553, 73.0239, 73.3924, 73.7925, 74.1660,
         74.5473, 74.9593, 75.3757, 75.8539, 76.3518, 76.8373, 77.3933, 77.9685,
         78.5833, 79.2350, 79.9418, 80.7188, 81.5495, 82.5248, 83.6362, 84.9091,
         86.5595, 88.8635, 92.3569, 95.7691, 102.8852, },
        {65.6723, 68.1118, 69.7050, 70.9826, 72.0382, 72.9590, 73.7569, 74.4852,
         75.1309, 75.7668, 76.3612, 76.9027, 77.4448, 77.9390, 78.4133, 78.8577,
         79.2745, 79.6682, 80.0871, 80.4905, 80.8735, 81.2429, 81.5987, 81.9572,
         82.3123, 82.6496, 82.9891, 83.3297, 83.6661, 83.9924, 84.3136, 84.6364,
         84.9352, 85.2490, 85.5632, 85.8729, 86.1808, 86.4796, 86.7929, 87.0887,
         87.3872, 87.6804, 87.9709, 88.2558, 88.5517, 88.8450, 89.1450, 89.4480,
         89.7247, 90.0334, 90.3439, 90.6602, 90.9629, 91.2609, 91.5646, 91.8728,
         92.1736, 92.4678, 92.7781, 93.0795, 93.4094, 93.7347, 94.0524, 94.3833,
         94.7278, 95.0727, 95.4016, 95.7342, 96.0939, 96.4770, 96.8512, 97.2043,
         97.5780, 97.9517, 98.3139, 98.7203, 99.1186, 99.5625, 100.0004, 100.4616,
         100.9434, 101.4345, 101.9370, 102.4865, 103.0213, 103.6195, 104.2285, 104.9029,
         105.5915, 106.3328, 107.1329, 107.9817, 108.9519, 109.9870, 111.2502, 112.7299,
         114.6429, 117.1618, 121.0860, 124.9858, 133.0775, },
        {90.5324, 93.4984, 95.3755, 96.8204, 98.0881, 99.1186, 100.0597, 100.9067,
         101.6620, 102.3973, 103.0831, 103.7294, 104.3444, 104.9225, 105.4763, 106.0015,
         106.4785, 106.9824, 107.4567, 107.9140, 108.3232, 108.7759, 109.2260, 109.6454,
         110.0734, 110.4705, 110.8605, 111.2498, 111.6316, 111.9855, 112.3626, 112.7175,
         113.0768, 113.4300, 113.7746, 114.1337, 114.4652, 114.8386, 115.1855, 115.5369,
         115.8747, 116.2141, 116.5529, 116.8989, 117.2287, 117.5540, 117.8938, 118.2358,
         118.5786, 118.9245, 119.2801, 119.6086, 119.9691, 120.3095, 120.6611, 121.0044,
         121.3467, 121.6865, 122.0407, 122.3861, 122.7452, 123.1077, 123.4791, 123.8390,
         124.2142, 124.5984, 125.0103, 125.4008, 125.8079, 126.2244, 126.6467, 127.0791,
         127.5020, 127.9420, 128.4076, 128.8702, 129.3421, 129.8277, 130.3384, 130.8537,
         131.3410, 131.8966, 132.4422, 133.0013, 133.6190, 134.2914, 134.9700, 135.7435,
         136.5699, 137.3961, 138.2496, 139.2171, 140.3040, 141.5483, 142.9595, 144.5780,
         146.8646, 149.6919, 154.1611, 158.4272, 168.0762, },
    },
    {   // case 1
        {0.5926, 0.7300, 0.8342, 0.9254, 1.0065, 1.0822, 1.1498, 1.2164,
         1.2781, 1.3392, 1.3973, 1.4549, 1.5112, 1.5667, 1.6207, 1.6743,
         1.7307, 1.7814, 1.8311, 1.8822, 1.9325, 1.9837, 2.0342, 2.0888,
         2.1369, 2.1877, 2.2363, 2.2869, 2.3372, 2.3875, 2.4383, 2.4912,
         2.5411, 2.5917, 2.6413, 2.6942, 2.7473, 2.8004, 2.8484, 2.9030,
         2.9562, 3.0094, 3.0616, 3.1125, 3.1666, 3.2217, 3.2770, 3.3334,
         3.3874, 3.4463, 3.5032, 3.5621, 3.6199, 3.6835, 3.7449, 3.8071,
         3.8722, 3.9374, 4.0054, 4.0750, 4.1420, 4.2096, 4.2804, 4.3517,
         4.4260, 4.5025, 4.5814, 4.6685, 4.7557, 4.8392, 4.9283, 5.0225,
         5.1162, 5.2088, 5.3048, 5.4080, 5.5158, 5.6255, 5.7399, 5.8627,
         5.9913, 6.1269, 6.2772, 6.4289, 6.5894, 6.7529, 6.9257, 7.1164,
         7.3181, 7.5301, 7.7811, 8.0584, 8.3622, 8.7257, 9.1160, 9.5998,
         10.2508, 11.1689, 12.7030, 14.1563, 17.8313, },
        {4.5170, 5.0583, 5.4326, 5.7423, 6.0003, 6.2197, 6.4246, 6.6013,
         6.7703, 6.9312, 7.0788, 7.2357, 7.3783, 7.5172, 7.6529, 7.7823,
         7.9118, 8.0361, 8.1538, 8.2763, 8.3912, 8.5085, 8.6168, 8.7239,
         8.8308, 8.9374, 9.0501, 9.1520, 9.2594, 9.3647, 9.4655, 9.5677,
         9.6771, 9.7788, 9.8781, 9.9810, 10.0773, 10.1816, 10.2828, 10.3837,
         10.4884, 10.5854, 10.6852, 10.7814, 10.8796, 10.9799, 11.0852, 11.1899,
         11.2976, 11.4033, 11.5094, 11.6098, 11.7228, 11.8324, 11.9460, 12.0572,
         12.1728, 12.2855, 12.4001, 12.5177, 12.6336, 12.7492, 12.8724, 12.9950,
         13.1262, 13.2529, 13.3846, 13.5114, 13.6521, 13.7892, 13.9357, 14.0759,
         14.2204, 14.3724, 14.5322, 14.6970, 14.8674, 15.0447, 15.2247, 15.4104,
         15.5978, 15.8095, 16.0269, 16.2431, 16.4786, 16.7201, 16.9942, 17.2753,
         17.5870, 17.9033, 18.2721, 18.6638, 19.1039, 19.6094, 20.1864, 20.9045,
         21.7595, 22.8884, 25.0267, 26.9955, 30.9964, },
        {12.3729, 13.3847, 14.0630, 14.5666, 15.0092, 15.4288, 15.7763, 16.0914,
         16.3781, 16.6416, 16.8852, 17.1159, 17.3387, 17.5573, 17.7559, 17.9741,
         18.1736, 18.3687, 18.5434, 18.7333, 18.9111, 19.0800, 19.2540, 19.4177,
         19.5807, 19.7459, 19.8963, 20.0538, 20.2125, 20.3685, 20.5297, 20.6791,
         20.8264, 20.9859, 21.1481, 21.2959, 21.4497, 21.5931, 21.7381, 21.8877,
         22.0324, 22.1791, 22.3232, 22.4698, 22.6126, 22.7581, 22.9109, 23.0589,
         23.2162, 23.3651, 23.5171, 23.6666, 23.8177, 23.9696, 24.1229, 24.2770,
         24.4311, 24.5899, 24.7553, 24.9232, 25.0977, 25.2715, 25.4366, 25.6178,
         25.7867, 25.9649, 26.1295, 26.3218, 26.5036, 26.7010, 26.9017, 27.1070,
         27.3102, 27.5243, 27.7356, 27.9610, 28.1844, 28.4181, 28.6561, 28.9101,
         29.1747, 29.4449, 29.7234, 30.0280, 30.3362, 30.6611, 31.0073, 31.3841,
         31.7558, 32.2084, 32.6700, 33.1714, 33.7276, 34.3651, 35.1131, 35.9828,
         37.0770, 38.5966, 41.0167, 43.6137, 48.9524, },
        {24.3436, 25.7789, 26.7536, 27.4837, 28.0936, 28.6113, 29.0937, 29.5433,
         29.9385, 30.3065, 30.6639, 30.9836, 31.2925, 31.6013, 31.8997, 32.1848,
         32.4515, 32.7175, 32.9763, 33.2165, 33.4650, 33.6902, 33.9183, 34.1306,
         34.3619, 34.5836, 34.7960, 35.0062, 35.2130, 35.4169, 35.6284, 35.8291,
         36.0366, 36.2400, 36.4423, 36.6409, 36.8411, 37.0338, 37.2292, 37.4205,
         37.6119, 37.8060, 37.9888, 38.1821, 38.3824, 38.5768, 38.7765, 38.9707,
         39.1762, 39.3662, 39.5636, 39.7583, 39.9598, 40.1594, 40.3615, 40.5767,
         40.7836, 40.9836, 41.1867, 41.3925, 41.5991, 41.8110, 42.0367, 42.2488,
         42.4707, 42.6905, 42.9270, 43.1547, 43.3949, 43.6433, 43.8946, 44.1436,
         44.4060, 44.6524, 44.9174, 45.2020, 45.4911, 45.7754, 46.0781, 46.3867,
         46.7128, 47.0607, 47.4003, 47.7690, 48.1563, 48.5680, 49.0149, 49.4642,
         49.9453, 50.4568, 51.0385, 51.6839, 52.3538, 53.0688, 53.9590, 54.9990,
         56.3190, 58.0369, 60.9629, 63.8716, 70.3054, },
        {40.2825, 42.0827, 43.3797, 44.3710, 45.1400, 45.8204, 46.4171, 46.9505,
         47.4736, 47.9117, 48.3515, 48.7773, 49.1739, 49.5351, 49.8964, 50.2370,
         50.5816, 50.9067, 51.2144, 51.5345, 51.8448, 52.1261, 52.4026, 52.6908,
         52.9592, 53.2378, 53.5104, 53.7732, 54.0317, 54.2970, 54.5456, 54.7965,
         55.0385, 55.2838, 55.5352, 55.7856, 56.0305, 56.2796, 56.5238, 56.7726,
         57.0037, 57.2449, 57.4809, 57.7278, 57.9699, 58.2083, 58.4489, 58.6816,
         58.9297, 59.1690, 59.3955, 59.6360, 59.8715, 60.1171, 60.3608, 60.6038,
         60.8483, 61.0938, 61.3509, 61.6112, 61.8674, 62.1382, 62.4119, 62.6932,
         62.9602, 63.2267, 63.5029, 63.7794, 64.0758, 64.3673, 64.6731, 64.9650,
         65.2633, 65.5864, 65.8903, 66.2056, 66.5425, 66.9020, 67.2811, 67.6601,
         68.0393, 68.4410, 68.8628, 69.2880, 69.7465, 70.2409, 70.7543, 71.2537,
         71.8479, 72.4581, 73.1122, 73.8477, 74.6834, 75.5931, 76.6312, 77.9072,
         79.4746, 81.5090, 85.0594, 88.5124, 96.4193, },
        {60.0068, 62.3502, 63.9228, 65.0980, 66.0763, 66.9051, 67.6670, 68.3704,
         68.9969, 69.5381, 70.0743, 70.5956, 71.0616, 71.5201, 71.9616, 72.3763,
         72.7997, 73.1988, 73.5755, 73.9450, 74.3123, 74.6766, 75.0347, 75.3807,
         75.7199, 76.0630, 76.4042, 76.7073, 77.0300, 77.3347, 77.6256, 77.9277,
         78.2206, 78.5220, 78.8174, 79.1303, 79.4073, 79.6971, 79.9842, 80.2646,
         80.5550, 80.8147, 81.1075, 81.3747, 81.6550, 81.9366, 82.2069, 82.4982,
         82.7703, 83.0495, 83.3184, 83.5975, 83.9016, 84.1779, 84.4607, 84.7601,
         85.0460, 85.3446, 85.6384, 85.9238, 86.2366, 86.5479, 86.8737, 87.1812,
         87.4855, 87.8097, 88.1439, 88.4829, 88.7993, 89.1404, 89.4902, 89.8389,
         90.2170, 90.5992, 90.9522, 91.3249, 91.7326, 92.1543, 92.5700, 93.0134,
         93.4711, 93.9298, 94.4223, 94.9321, 95.4830, 96.0579, 96.6421, 97.2648,
         97.8959, 98.6255, 99.4048, 100.2487, 101.1489, 102.2173, 103.3958, 104.8096,
         106.5895, 108.9404, 112.7899, 116.5103, 124.4558, },
        {83.7178, 86.6698, 88.5684, 89.9859, 91.1491, 92.1464, 93.0085, 93.8027,
         94.5504, 95.2024, 95.8486, 96.4248, 96.9728, 97.5216, 98.0562, 98.5548,
         99.0555, 99.5220, 99.9699, 100.4086, 100.8232, 101.2151, 101.6075, 102.0062,
         102.3848, 102.7595, 103.1472, 103.5176, 103.8650, 104.2294, 104.5952, 104.9456,
         105.2872, 105.6193, 105.9835, 106.3193, 106.6493, 107.0140, 107.3506, 107.6839,
         108.0017, 108.3247, 108.6469, 108.9873, 109.3381, 109.6704, 109.9887, 110.3179,
         110.6283, 110.9855, 111.3177, 111.6479, 111.9718, 112.3055, 112.6253, 112.9579,
         113.2765, 113.6089, 113.9411, 114.2744, 114.6307, 114.9689, 115.3210, 115.6719,
         116.0072, 116.4027, 116.7744, 117.1347, 117.5146, 117.9092, 118.3300, 118.7334,
         119.1423, 119.5807, 120.0130, 120.4428, 120.8847, 121.3446, 121.8476, 122.3332,
         122.8194, 123.3148, 123.8710, 124.4524, 125.0614, 125.6986, 126.3928, 127.0971,
         127.8232, 128.6233, 129.4790, 130.4088, 131.5176, 132.7203, 134.1551, 135.7454,
         137.7302, 140.2968, 144.8279, 148.9411, 156.8260, },
        {111.6793, 114.8853, 117.0017, 118.6243, 119.9354, 121.0289, 122.0661, 123.0382,
         123.9286, 124.7676, 125.4848, 126.2083, 126.8436, 127.4490, 128.0540, 128.6375,
         129.1840, 129.7054, 130.2158, 130.6883, 131.1760, 131.6456, 132.1164, 132.5786,
         133.0422, 133.4853, 133.9024, 134.3513, 134.7814, 135.1959, 135.6001, 136.0247,
         136.4219, 136.8104, 137.2109, 137.6054, 137.9824, 138.3532, 138.7273, 139.0916,
         139.4692, 139.8532, 140.1975, 140.5797, 140.9516, 141.3154, 141.6848, 142.0603,
         142.4290, 142.8140, 143.1972, 143.5547, 143.9172, 144.2907, 144.6601, 145.0160,
         145.3874, 145.7527, 146.1529, 146.5506, 146.9483, 147.3378, 147.7297, 148.1288,
         148.5358, 148.9494, 149.3776, 149.7981, 150.2261, 150.6706, 151.1178, 151.5489,
         152.0301, 152.4983, 152.9812, 153.4699, 153.9798, 154.5225, 155.0774, 155.6424,
         156.2202, 156.8052, 157.4289, 158.0379, 158.7160, 159.4050, 160.1615, 160.9744,
         161.8011, 162.7023, 163.6612, 164.7039, 165.9209, 167.1933, 168.7161, 170.5118,
         172.7724, 175.9211, 180.8265, 185.5102, 194.9798, },
    },
    {   // case 2
        {0.0001, 0.0006, 0.0014, 0.0025, 0.0039, 0.0056, 0.0076, 0.0100,
         0.0127, 0.0157, 0.0192, 0.0227, 0.0267, 0.0309, 0.0354, 0.0403,
         0.0455, 0.0510, 0.0569, 0.0632, 0.0698, 0.0768, 0.0841, 0.0920,
         0.0996, 0.1079, 0.1168, 0.1261, 0.1355, 0.1451, 0.1556, 0.1668,
         0.1792, 0.1913, 0.2041, 0.2176, 0.2313, 0.2446, 0.2587, 0.2733,
         0.2888, 0.3056, 0.3225, 0.3389, 0.3568, 0.3740, 0.3922, 0.4118,
         0.4316, 0.4537, 0.4754, 0.4990, 0.5226, 0.5465, 0.5707, 0.5950,
         0.6221, 0.6485, 0.6771, 0.7073, 0.7371, 0.7688, 0.8030, 0.8362,
         0.8723, 0.9091, 0.9490, 0.9890, 1.0322, 1.0754, 1.1220, 1.1689,
         1.2186, 1.2708, 1.3245, 1.3825, 1.4431, 1.5073, 1.5752, 1.6444,
         1.7186, 1.7979, 1.8855, 1.9794, 2.0724, 2.1821, 2.2979, 2.4226,
         2.5645, 2.7278, 2.8857, 3.0800, 3.3007, 3.5651, 3.8591, 4.2470,
         4.7383, 5.4503, 6.7175, 7.9909, 10.8209, },
        {2.2895, 2.6631, 2.9285, 3.1327, 3.3126, 3.4782, 3.6343, 3.7788,
         3.9117, 4.0361, 4.1548, 4.2730, 4.3837, 4.4974, 4.5980, 4.6967,
         4.7980, 4.8962, 4.9881, 5.0871, 5.1732, 5.2628, 5.3506, 5.4348,
         5.5266, 5.6136, 5.7012, 5.7824, 5.8681, 5.9525, 6.0378, 6.1209,
         6.2052, 6.2909, 6.3776, 6.4590, 6.5455, 6.6253, 6.7095, 6.7858,
         6.8713, 6.9513, 7.0399, 7.1249, 7.2103, 7.2974, 7.3878, 7.4774,
         7.5659, 7.6575, 7.7473, 7.8313, 7.9203, 8.0131, 8.1031, 8.2031,
         8.2968, 8.3942, 8.4932, 8.5916, 8.6951, 8.7943, 8.9022, 9.0117,
         9.1265, 9.2342, 9.3509, 9.4682, 9.5890, 9.7124, 9.8381, 9.9625,
         10.0936, 10.2308, 10.3716, 10.5146, 10.6606, 10.8113, 10.9710, 11.1344,
         11.3079, 11.4936, 11.6874, 11.8794, 12.0916, 12.3149, 12.5480, 12.7952,
         13.0809, 13.3674, 13.6880, 14.0442, 14.4446, 14.9165, 15.4649, 16.1126,
         16.9575, 18.1436, 19.9895, 21.7610, 26.2313, },
        {9.1921, 10.0473, 10.6208, 11.0503, 11.3964, 11.7284, 12.0311, 12.3006,
         12.5679, 12.7910, 13.0078, 13.2210, 13.4208, 13.6123, 13.8058, 13.9773,
         14.1554, 14.3301, 14.4926, 14.6478, 14.7972, 14.9394, 15.0937, 15.2471,
         15.3908, 15.5442, 15.6872, 15.8285, 15.9844, 16.1210, 16.2549, 16.3957,
         16.5342, 16.6727, 16.8137, 16.9503, 17.0936, 17.2264, 17.3622, 17.4965,
         17.6236, 17.7607, 17.8951, 18.0284, 18.1614, 18.2968, 18.4379, 18.5744,
         18.7148, 18.8547, 18.9860, 19.1242, 19.2629, 19.4119, 19.5536, 19.6963,
         19.8390, 19.9810, 20.1319, 20.2846, 20.4403, 20.5913, 20.7432, 20.9048,
         21.0595, 21.2261, 21.3987, 21.5775, 21.7500, 21.9270, 22.1033, 22.2887,
         22.4803, 22.6748, 22.8731, 23.0709, 23.2788, 23.4880, 23.7005, 23.9206,
         24.1635, 24.4131, 24.6845, 24.9730, 25.2467, 25.5523, 25.8942, 26.2534,
         26.6082, 26.9986, 27.4547, 27.9231, 28.4326, 29.0321, 29.7606, 30.6906,
         31.7697, 33.1547, 35.5936, 37.9099, 42.5037, },
        {20.0842, 21.3775, 22.2871, 22.9720, 23.5025, 23.9869, 24.4290, 24.8227,
         25.1944, 25.5754, 25.8970, 26.2034, 26.5204, 26.7988, 27.0601, 27.3074,
         27.5438, 27.7866, 28.0272, 28.2522, 28.4771, 28.7071, 28.9268, 29.1370,
         29.3437, 29.5417, 29.7250, 29.9285, 30.1241, 30.3193, 30.5102, 30.7008,
         30.8863, 31.0756, 31.2728, 31.4614, 31.6505, 31.8319, 32.0095, 32.1924,
         32.3729, 32.5474, 32.7213, 32.8994, 33.0887, 33.2746, 33.4568, 33.6394,
         33.8280, 34.0087, 34.1928, 34.3912, 34.5786, 34.7576, 34.9391, 35.1189,
         35.3142, 35.5053, 35.7089, 35.9092, 36.1190, 36.3189, 36.5300, 36.7347,
         36.9419, 37.1621, 37.3817, 37.5990, 37.8305, 38.0629, 38.3022, 38.5299,
         38.7601, 39.0051, 39.2520, 39.5035, 39.7829, 40.0664, 40.3433, 40.6362,
         40.9273, 41.2528, 41.5880, 41.9312, 42.2933, 42.6811, 43.0646, 43.4984,
         43.9634, 44.4628, 45.0039, 45.5759, 46.2285, 46.9849, 47.8474, 48.8038,
         50.2246, 52.0359, 54.7658, 57.2760, 62.7649, },
        {35.1995, 36.8835, 38.0111, 38.8790, 39.6137, 40.2636, 40.8319, 41.3440,
         41.8415, 42.3102, 42.7157, 43.0990, 43.4676, 43.8264, 44.1636, 44.4801,
         44.8053, 45.1154, 45.4062, 45.6878, 45.9746, 46.2420, 46.5258, 46.7928,
         47.0558, 47.3207, 47.5809, 47.8205, 48.0675, 48.2982, 48.5311, 48.7627,
         49.0032, 49.2491, 49.4896, 49.7159, 49.9517, 50.1782, 50.4081, 50.6273,
         50.8671, 51.0779, 51.3003, 51.5328, 51.7546, 51.9782, 52.2156, 52.4550,
         52.6927, 52.9171, 53.1423, 53.3771, 53.6001, 53.8289, 54.0572, 54.2999,
         54.5274, 54.7590, 54.9995, 55.2444, 55.4907, 55.7270, 55.9722, 56.2198,
         56.4795, 56.7447, 56.9997, 57.2517, 57.5315, 57.8168, 58.0932, 58.3802,
         58.6698, 58.9801, 59.3084, 59.6151, 59.9348, 60.2697, 60.6062, 60.9601,
         61.3309, 61.7050, 62.1128, 62.5415, 62.9807, 63.4746, 63.9767, 64.4844,
         64.9881, 65.5741, 66.2137, 66.9140, 67.6953, 68.5673, 69.6099, 70.7847,
         72.3081, 74.3433, 77.5263, 80.5381, 87.5510, },
        {54.1179, 56.2510, 57.6961, 58.8254, 59.7401, 60.5459, 61.2792, 61.9020,
         62.5150, 63.0391, 63.5581, 64.0304, 64.5156, 64.9668, 65.3878, 65.7746,
         66.1495, 66.5028, 66.8686, 67.2118, 67.5481, 67.8644, 68.1998, 68.5370,
         68.8459, 69.1569, 69.4698, 69.7722, 70.0551, 70.3594, 70.6518, 70.9347,
         71.2232, 71.5008, 71.7670, 72.0401, 72.3167, 72.5961, 72.8729, 73.1307,
         73.4057, 73.6717, 73.9265, 74.1937, 74.4604, 74.7539, 75.0261, 75.2926,
         75.5625, 75.8258, 76.0960, 76.3703, 76.6434, 76.9243, 77.2017, 77.4761,
         77.7501, 78.0319, 78.3248, 78.6191, 78.9099, 79.2095, 79.5011, 79.8046,
         80.1180, 80.4211, 80.7358, 81.0558, 81.3740, 81.7042, 82.0277, 82.3692,
         82.7187, 83.0777, 83.4318, 83.8031, 84.1921, 84.6149, 85.0162, 85.4438,
         85.9114, 86.3756, 86.8429, 87.3101, 87.8021, 88.3521, 88.9207, 89.5338,
         90.1621, 90.8729, 91.6310, 92.4698, 93.3846, 94.4004, 95.5688, 96.9752,
         98.5945, 100.7246, 104.4560, 108.0848, 115.3783, },
        {76.9350, 79.6072, 81.3933, 82.6990, 83.7606, 84.7586, 85.6244, 86.3896,
         87.0815, 87.7541, 88.3544, 88.9054, 89.4217, 89.8918, 90.3622, 90.8311,
         91.2957, 91.7452, 92.1631, 92.5908, 92.9873, 93.3799, 93.7710, 94.1414,
         94.5320, 94.9039, 95.2629, 95.6340, 95.9735, 96.3158, 96.6523, 96.9910,
         97.3160, 97.6406, 97.9726, 98.3067, 98.6220, 98.9516, 99.2829, 99.6081,
         99.9135, 100.2387, 100.5549, 100.8787, 101.1872, 101.4966, 101.8040, 102.1255,
         102.4275, 102.7191, 103.0328, 103.3423, 103.6698, 103.9787, 104.2948, 104.6045,
         104.9221, 105.2582, 105.5928, 105.9136, 106.2471, 106.5888, 106.9506, 107.3054,
         107.6421, 107.9990, 108.3583, 108.7211, 109.0856, 109.4434, 109.8266, 110.1972,
         110.5903, 110.9848, 111.4147, 111.8478, 112.2639, 112.7143, 113.2127, 113.7085,
         114.1993, 114.7201, 115.2359, 115.8359, 116.3916, 117.0024, 117.6320, 118.3219,
         119.0323, 119.7493, 120.6304, 121.5480, 122.5781, 123.6827, 125.0159, 126.5055,
         128.4606, 131.2484, 135.3183, 139.3993, 147.5079, },
        {103.7469, 106.8377, 108.8902, 110.4510, 111.7013, 112.7986, 113.7722, 114.6305,
         115.4129, 116.2065, 116.9641, 117.6343, 118.2765, 118.8669, 119.4344, 120.0027,
         120.5465, 121.0636, 121.5654, 122.0343, 122.4947, 122.9552, 123.4074, 123.8504,
         124.2727, 124.6910, 125.1183, 125.5180, 125.9288, 126.3398, 126.7192, 127.1083,
         127.4701, 127.8493, 128.2454, 128.6098, 128.9700, 129.3417, 129.6946, 130.0632,
         130.4370, 130.8362, 131.1784, 131.5509, 131.8967, 132.2535, 132.6050, 132.9703,
         133.3367, 133.6815, 134.0295, 134.3914, 134.7444, 135.1081, 135.4480, 135.8042,
         136.1657, 136.5537, 136.9090, 137.2735, 137.6559, 138.0304, 138.4022, 138.7876,
         139.2002, 139.5893, 139.9849, 140.3982, 140.8259, 141.2512, 141.6761, 142.1145,
         142.5527, 143.0211, 143.5077, 144.0087, 144.4939, 144.9727, 145.5288, 146.0784,
         146.6303, 147.2094, 147.7982, 148.4080, 149.0864, 149.7661, 150.4984, 151.2784,
         152.1309, 153.0138, 154.0076, 155.0415, 156.1739, 157.4491, 158.9098, 160.6527,
         162.7338, 165.7388, 170.4736, 174.6750, 183.5723, },
    },
    {   // case 3
        {1.5335, 1.7836, 1.9704, 2.1284, 2.2590, 2.3777, 2.4889, 2.5929,
         2.6938, 2.7857, 2.8789, 2.9632, 3.0462, 3.1241, 3.2057, 3.2866,
         3.3633, 3.4433, 3.5173, 3.5867, 3.6606, 3.7316, 3.7993, 3.8692,
         3.9346, 4.0065, 4.0788, 4.1479, 4.2128, 4.2808, 4.3452, 4.4150,
         4.4825, 4.5504, 4.6156, 4.6811, 4.7503, 4.8225, 4.8896, 4.9623,
         5.0314, 5.1022, 5.1718, 5.2446, 5.3177, 5.3883, 5.4583, 5.5355,
         5.6057, 5.6818, 5.7571, 5.8315, 5.9073, 5.9870, 6.0677, 6.1503,
         6.2351, 6.3168, 6.4015, 6.4881, 6.5742, 6.6626, 6.7542, 6.8422,
         6.9350, 7.0369, 7.1398, 7.2368, 7.3373, 7.4376, 7.5465, 7.6568,
         7.7741, 7.8873, 8.0137, 8.1367, 8.2692, 8.3985, 8.5404, 8.6982,
         8.8486, 9.0151, 9.1779, 9.3487, 9.5327, 9.7306, 9.9473, 10.1672,
         10.4078, 10.6754, 10.9588, 11.2630, 11.6284, 12.0479, 12.5316, 13.1189,
         13.8391, 14.8429, 16.5501, 18.1052, 21.6718, },
        {7.4069, 8.1159, 8.6118, 8.9958, 9.3046, 9.5892, 9.8505, 10.0871,
         10.3122, 10.5236, 10.7070, 10.8851, 11.0504, 11.2228, 11.3809, 11.5303,
         11.6863, 11.8359, 11.9758, 12.1195, 12.2471, 12.3800, 12.5035, 12.6409,
         12.7689, 12.8975, 13.0220, 13.1523, 13.2752, 13.3972, 13.5240, 13.6450,
         13.7743, 13.8964, 14.0199, 14.1384, 14.2588, 14.3754, 14.4894, 14.6089,
         14.7262, 14.8502, 14.9678, 15.0887, 15.2128, 15.3304, 15.4520, 15.5706,
         15.6975, 15.8191, 15.9370, 16.0601, 16.1859, 16.3157, 16.4456, 16.5782,
         16.7037, 16.8403, 16.9747, 17.1089, 17.2526, 17.3925, 17.5288, 17.6765,
         17.8301, 17.9807, 18.1299, 18.2859, 18.4415, 18.6050, 18.7674, 18.9291,
         19.1112, 19.2793, 19.4595, 19.6502, 19.8491, 20.0430, 20.2543, 20.4616,
         20.6816, 20.9184, 21.1530, 21.4075, 21.6645, 21.9573, 22.2523, 22.5806,
         22.9060, 23.2953, 23.6845, 24.1156, 24.6058, 25.1619, 25.8326, 26.5915,
         27.5783, 28.9255, 31.0668, 33.0919, 37.5944, },
        {17.3831, 18.5577, 19.3359, 19.9490, 20.4595, 20.9035, 21.2809, 21.6416,
         21.9514, 22.2692, 22.5630, 22.8469, 23.0902, 23.3502, 23.5850, 23.8211,
         24.0459, 24.2659, 24.4749, 24.6860, 24.8940, 25.0907, 25.2773, 25.4710,
         25.6549, 25.8351, 26.0290, 26.2098, 26.3784, 26.5588, 26.7359, 26.9039,
         27.0712, 27.2394, 27.4111, 27.5822, 27.7507, 27.9180, 28.0841, 28.2611,
         28.4481, 28.6059, 28.7643, 28.9280, 29.0893, 29.2564, 29.4263, 29.5807,
         29.7505, 29.9139, 30.0901, 30.2570, 30.4316, 30.6002, 30.7820, 30.9547,
         31.1287, 31.2985, 31.4761, 31.6689, 31.8415, 32.0284, 32.2223, 32.4017,
         32.5851, 32.7777, 32.9840, 33.1852, 33.3941, 33.6026, 33.8248, 34.0402,
         34.2684, 34.5038, 34.7353, 34.9714, 35.2264, 35.4854, 35.7523, 36.0278,
         36.3245, 36.6086, 36.9215, 37.2485, 37.5781, 37.9236, 38.2833, 38.6793,
         39.1038, 39.5773, 40.0657, 40.6351, 41.2852, 41.9876, 42.7533, 43.7444,
         44.9503, 46.4531, 49.1052, 51.6218, 57.2789, },
        {31.2891, 33.0157, 34.0819, 34.9200, 35.6261, 36.2053, 36.7301, 37.2204,
         37.6608, 38.0983, 38.4894, 38.8497, 39.2042, 39.5184, 39.8434, 40.1516,
         40.4489, 40.7358, 41.0134, 41.2792, 41.5423, 41.8040, 42.0538, 42.3271,
         42.5891, 42.8351, 43.0585, 43.2834, 43.5073, 43.7328, 43.9597, 44.1734,
         44.4032, 44.6187, 44.8419, 45.0632, 45.2886, 45.4964, 45.7152, 45.9303,
         46.1331, 46.3363, 46.5541, 46.7625, 46.9686, 47.1795, 47.3821, 47.5935,
         47.8033, 48.0177, 48.2291, 48.4386, 48.6559, 48.8665, 49.0849, 49.2996,
         49.5192, 49.7424, 49.9651, 50.1869, 50.4153, 50.6419, 50.8779, 51.1089,
         51.3575, 51.6018, 51.8421, 52.0855, 52.3600, 52.6309, 52.8860, 53.1603,
         53.4484, 53.7334, 54.0373, 54.3217, 54.6348, 54.9631, 55.2758, 55.6159,
         55.9730, 56.3192, 56.7173, 57.0962, 57.5046, 57.9288, 58.3679, 58.8573,
         59.3697, 59.9335, 60.5537, 61.2153, 61.9568, 62.7889, 63.7391, 64.8437,
         66.3712, 68.2317, 71.2953, 74.2027, 80.8684, },
        {49.3030, 51.3147, 52.7718, 53.8481, 54.6986, 55.4252, 56.0608, 56.6608,
         57.2083, 57.7252, 58.2126, 58.6669, 59.0778, 59.4870, 59.8780, 60.2563,
         60.6265, 60.9856, 61.3258, 61.6406, 61.9789, 62.2948, 62.6049, 62.9163,
         63.2130, 63.4972, 63.7937, 64.0818, 64.3699, 64.6372, 64.9069, 65.1818,
         65.4423, 65.7017, 65.9637, 66.2208, 66.4774, 66.7388, 66.9870, 67.2470,
         67.5063, 67.7581, 68.0257, 68.2683, 68.5299, 68.7793, 69.0275, 69.2941,
         69.5589, 69.8290, 70.0893, 70.3514, 70.6162, 70.8915, 71.1585, 71.4195,
         71.6713, 71.9532, 72.2285, 72.5035, 72.7730, 73.0402, 73.3293, 73.6130,
         73.8755, 74.1794, 74.4770, 74.7857, 75.0922, 75.3975, 75.6959, 76.0216,
         76.3314, 76.6690, 77.0019, 77.3568, 77.7178, 78.0781, 78.4797, 78.8707,
         79.2880, 79.7160, 80.1483, 80.6395, 81.1393, 81.6338, 82.1756, 82.7288,
         83.3152, 83.9743, 84.6692, 85.4082, 86.2753, 87.2872, 88.3723, 89.6579,
         91.4408, 93.8280, 97.2303, 100.6766, 108.0022, },
        {71.2692, 73.7687, 75.4149, 76.7105, 77.6938, 78.5594, 79.3816, 80.1253,
         80.7899, 81.3979, 81.9931, 82.5044, 83.0184, 83.5167, 83.9722, 84.4160,
         84.8689, 85.2952, 85.7217, 86.1148, 86.5051, 86.8675, 87.2396, 87.6090,
         87.9670, 88.3208, 88.6554, 88.9645, 89.2831, 89.6135, 89.9393, 90.2547,
         90.5819, 90.9037, 91.2009, 91.5027, 91.8124, 92.1205, 92.4001, 92.7069,
         93.0108, 93.3038, 93.6197, 93.9143, 94.2340, 94.5331, 94.8255, 95.1172,
         95.4018, 95.6980, 96.0024, 96.3252, 96.6259, 96.9261, 97.2298, 97.5276,
         97.8462, 98.1596, 98.4739, 98.7863, 99.0916, 99.4276, 99.7593, 100.0846,
         100.4242, 100.7642, 101.1069, 101.4453, 101.7898, 102.1375, 102.4997, 102.8816,
         103.2903, 103.6816, 104.0911, 104.5224, 104.9260, 105.3468, 105.7838, 106.2674,
         106.7246, 107.2172, 107.6809, 108.2058, 108.7874, 109.3601, 110.0072, 110.6417,
         111.4064, 112.1397, 112.9733, 113.8641, 114.8383, 115.8844, 117.1341, 118.6460,
         120.3782, 122.8873, 126.7934, 130.6888, 139.0410, },
        {96.8520, 100.0237, 101.9638, 103.4194, 104.6613, 105.7691, 106.7064, 107.5382,
         108.3083, 109.0289, 109.7211, 110.3347, 110.9182, 111.4950, 112.0139, 112.5385,
         113.0338, 113.5171, 114.0028, 114.4674, 114.9092, 115.3431, 115.7647, 116.1794,
         116.5852, 116.9871, 117.3942, 117.8004, 118.1733, 118.5454, 118.9131, 119.2803,
         119.6417, 120.0205, 120.4009, 120.7764, 121.1298, 121.4658, 121.8037, 122.1413,
         122.4849, 122.8252, 123.1703, 123.5172, 123.8590, 124.1962, 124.5294, 124.8705,
         125.2095, 125.5593, 125.9138, 126.2601, 126.5882, 126.9486, 127.3084, 127.6449,
         128.0053, 128.3653, 128.7263, 129.0998, 129.4486, 129.8162, 130.1907, 130.5648,
         130.9289, 131.3155, 131.6970, 132.0812, 132.4762, 132.8641, 133.2758, 133.7091,
         134.1502, 134.6120, 135.0792, 135.5591, 136.0524, 136.5416, 137.0559, 137.5854,
         138.1113, 138.6688, 139.2459, 139.8382, 140.5053, 141.1546, 141.8925, 142.6235,
         143.4360, 144.2285, 145.1416, 146.0723, 147.1532, 148.4069, 149.7808, 151.4476,
         153.4246, 156.2755, 161.0393, 164.7562, 173.0796, },
        {126.7967, 130.2420, 132.4590, 134.1884, 135.6035, 136.8432, 137.9543, 138.8614,
         139.7768, 140.5817, 141.3697, 142.1178, 142.7923, 143.4354, 144.0521, 144.6121,
         145.1829, 145.7449, 146.2963, 146.8151, 147.3097, 147.8039, 148.3374, 148.8074,
         149.2739, 149.7460, 150.2324, 150.6698, 151.1205, 151.5655, 151.9918, 152.4000,
         152.8083, 153.2193, 153.6138, 154.0283, 154.4064, 154.7945, 155.1779, 155.5621,
         155.9311, 156.3259, 156.7134, 157.0975, 157.4815, 157.8760, 158.2566, 158.6169,
         158.9974, 159.3778, 159.7629, 160.1567, 160.5570, 160.9289, 161.3250, 161.6887,
         162.0838, 162.4835, 162.8942, 163.2930, 163.7001, 164.0990, 164.5447, 164.9813,
         165.4205, 165.8529, 166.2940, 166.7266, 167.1713, 167.6322, 168.1234, 168.5761,
         169.0286, 169.5365, 170.0449, 170.5905, 171.1324, 171.6591, 172.2146, 172.8063,
         173.4185, 174.0355, 174.6578, 175.3367, 176.0697, 176.7927, 177.6085, 178.4031,
         179.2805, 180.2397, 181.2703, 182.4548, 183.6369, 185.0153, 186.5492, 188.4968,
         190.7664, 193.7986, 199.0298, 203.4973, 213.2391, },
    },
    {   // case 4
        {0.0002, 0.0006, 0.0015, 0.0026, 0.0040, 0.0057, 0.0080, 0.0102,
         0.0129, 0.0158, 0.0192, 0.0230, 0.0268, 0.0311, 0.0358, 0.0407,
         0.0460, 0.0513, 0.0573, 0.0635, 0.0701, 0.0771, 0.0840, 0.0918,
         0.0996, 0.1080, 0.1164, 0.1260, 0.1356, 0.1456, 0.1565, 0.1670,
         0.1782, 0.1904, 0.2025, 0.2150, 0.2281, 0.2417, 0.2566, 0.2721,
         0.2876, 0.3031, 0.3192, 0.3359, 0.3531, 0.3720, 0.3902, 0.4110,
         0.4299, 0.4508, 0.4721, 0.4945, 0.5168, 0.5417, 0.5659, 0.5922,
         0.6196, 0.6479, 0.6755, 0.7074, 0.7377, 0.7690, 0.8028, 0.8361,
         0.8727, 0.9096, 0.9461, 0.9845, 1.0269, 1.0700, 1.1129, 1.1599,
         1.2067, 1.2596, 1.3150, 1.3729, 1.4349, 1.4996, 1.5664, 1.6376,
         1.7097, 1.7883, 1.8758, 1.9630, 2.0628, 2.1767, 2.2857, 2.4065,
         2.5480, 2.6909, 2.8596, 3.0532, 3.2643, 3.5258, 3.8271, 4.2058,
         4.6846, 5.3630, 6.5279, 7.7692, 10.5809, },
        {3.3916, 3.8552, 4.1846, 4.4433, 4.6732, 4.8816, 5.0716, 5.2450,
         5.4032, 5.5499, 5.6942, 5.8240, 5.9579, 6.0840, 6.1999, 6.3149,
         6.4316, 6.5514, 6.6610, 6.7750, 6.8793, 6.9871, 7.0956, 7.2002,
         7.3040, 7.3980, 7.4955, 7.5920, 7.6864, 7.7880, 7.8895, 7.9854,
         8.0871, 8.1858, 8.2785, 8.3736, 8.4691, 8.5683, 8.6630, 8.7515,
         8.8502, 8.9479, 9.0445, 9.1427, 9.2447, 9.3434, 9.4397, 9.5390,
         9.6411, 9.7429, 9.8460, 9.9530, 10.0665, 10.1671, 10.2738, 10.3893,
         10.4947, 10.6112, 10.7203, 10.8362, 10.9524, 11.0665, 11.1950, 11.3147,
         11.4387, 11.5500, 11.6737, 11.7996, 11.9322, 12.0697, 12.2063, 12.3477,
         12.4958, 12.6388, 12.7790, 12.9337, 13.0951, 13.2657, 13.4351, 13.6245,
         13.8112, 14.0109, 14.2228, 14.4341, 14.6632, 14.9217, 15.1861, 15.4702,
         15.7760, 16.1068, 16.4504, 16.8382, 17.2679, 17.7613, 18.3063, 19.0003,
         19.8979, 21.0749, 22.9242, 24.8428, 29.0922, },
        {12.0739, 13.0260, 13.7149, 14.2322, 14.6486, 15.0377, 15.3727, 15.6816,
         15.9770, 16.2555, 16.5045, 16.7482, 16.9779, 17.1830, 17.3989, 17.6084,
         17.7987, 17.9893, 18.1790, 18.3634, 18.5479, 18.7211, 18.8858, 19.0553,
         19.2118, 19.3800, 19.5415, 19.7088, 19.8745, 20.0258, 20.1783, 20.3276,
         20.4791, 20.6325, 20.7852, 20.9301, 21.0706, 21.2214, 21.3719, 21.5197,
         21.6686, 21.8183, 21.9670, 22.1188, 22.2656, 22.4079, 22.5536, 22.7089,
         22.8681, 23.0148, 23.1712, 23.3213, 23.4722, 23.6288, 23.7830, 23.9379,
         24.0921, 24.2521, 24.4171, 24.5842, 24.7477, 24.9155, 25.0901, 25.2650,
         25.4366, 25.6209, 25.8128, 26.0027, 26.1948, 26.3840, 26.5860, 26.7835,
         26.9884, 27.2002, 27.4219, 27.6496, 27.8811, 28.1207, 28.3694, 28.6339,
         28.8993, 29.1515, 29.4345, 29.7277, 30.0361, 30.3669, 30.7325, 31.1157,
         31.5478, 31.9829, 32.4520, 32.9663, 33.5274, 34.1646, 34.9467, 35.8568,
         37.0057, 38.5195, 41.0021, 43.5695, 48.6701, },
        {25.0364, 26.5377, 27.4878, 28.2376, 28.8441, 29.4087, 29.8695, 30.3002,
         30.6990, 31.0933, 31.4299, 31.7690, 32.0864, 32.3934, 32.6802, 32.9688,
         33.2386, 33.5096, 33.7576, 34.0069, 34.2541, 34.4932, 34.7281, 34.9667,
         35.1942, 35.4038, 35.6209, 35.8292, 36.0377, 36.2570, 36.4672, 36.6656,
         36.8720, 37.0736, 37.2804, 37.4801, 37.6774, 37.8792, 38.0851, 38.2807,
         38.4724, 38.6719, 38.8605, 39.0573, 39.2545, 39.4464, 39.6595, 39.8562,
         40.0487, 40.2405, 40.4347, 40.6397, 40.8406, 41.0462, 41.2472, 41.4623,
         41.6712, 41.8734, 42.1031, 42.3233, 42.5352, 42.7492, 42.9732, 43.1971,
         43.4043, 43.6308, 43.8694, 44.1119, 44.3578, 44.6083, 44.8585, 45.1071,
         45.3815, 45.6574, 45.9304, 46.2190, 46.5014, 46.7945, 47.1091, 47.4343,
         47.7615, 48.0942, 48.4486, 48.8204, 49.1851, 49.5846, 50.0399, 50.4916,
         50.9923, 51.5038, 52.0969, 52.7518, 53.4383, 54.2811, 55.2059, 56.2980,
         57.7071, 59.5603, 62.5768, 65.3584, 71.6853, },
        {41.9996, 43.8771, 45.1562, 46.1321, 46.9698, 47.6655, 48.2877, 48.8555,
         49.3751, 49.8233, 50.2558, 50.6763, 51.0839, 51.4819, 51.8501, 52.1996,
         52.5477, 52.8878, 53.2023, 53.5246, 53.8447, 54.1374, 54.4484, 54.7465,
         55.0224, 55.2941, 55.5717, 55.8399, 56.1070, 56.3589, 56.6229, 56.8703,
         57.1339, 57.3810, 57.6400, 57.8851, 58.1270, 58.3763, 58.6152, 58.8586,
         59.1048, 59.3554, 59.6011, 59.8431, 60.0921, 60.3359, 60.5736, 60.8170,
         61.0563, 61.3097, 61.5544, 61.7908, 62.0298, 62.2708, 62.5329, 62.7783,
         63.0289, 63.2805, 63.5434, 63.7866, 64.0442, 64.3039, 64.5684, 64.8366,
         65.0988, 65.3659, 65.6446, 65.9129, 66.1970, 66.4880, 66.7910, 67.0938,
         67.4194, 67.7487, 68.0759, 68.4230, 68.7822, 69.1288, 69.5214, 69.9093,
         70.3108, 70.7150, 71.1494, 71.6105, 72.0709, 72.5582, 73.0527, 73.5620,
         74.1640, 74.7750, 75.4452, 76.2053, 77.0304, 77.9499, 79.0286, 80.2712,
         81.7687, 83.9528, 87.3503, 90.6758, 97.9659, },
        {63.0110, 65.3998, 66.8923, 68.1339, 69.1180, 70.0105, 70.7950, 71.4720,
         72.1157, 72.6613, 73.2008, 73.6831, 74.1707, 74.6284, 75.0638, 75.4789,
         75.8830, 76.2973, 76.6619, 77.0318, 77.3901, 77.7379, 78.0787, 78.4289,
         78.7648, 79.1015, 79.4185, 79.7386, 80.0442, 80.3536, 80.6680, 80.9624,
         81.2823, 81.5836, 81.8797, 82.1761, 82.4614, 82.7665, 83.0589, 83.3501,
         83.6469, 83.9399, 84.2257, 84.5231, 84.8278, 85.1175, 85.3963, 85.6846,
         85.9672, 86.2400, 86.5240, 86.8005, 87.1005, 87.4004, 87.6918, 87.9893,
         88.2812, 88.5755, 88.8772, 89.1934, 89.5016, 89.8069, 90.1163, 90.4194,
         90.7484, 91.0860, 91.4192, 91.7338, 92.0609, 92.4142, 92.7543, 93.1308,
         93.4891, 93.8706, 94.2660, 94.6616, 95.0837, 95.5094, 95.9422, 96.3988,
         96.8556, 97.3274, 97.8166, 98.3072, 98.8677, 99.4324, 100.0235, 100.6524,
         101.3139, 101.9930, 102.7789, 103.5962, 104.5560, 105.5708, 106.7971, 108.2317,
         109.9719, 112.3209, 116.1469, 119.8866, 128.0916, },
        {87.5939, 90.6629, 92.5612, 94.0221, 95.1947, 96.2220, 97.1103, 97.9085,
         98.5926, 99.2882, 99.9162, 100.4986, 101.0254, 101.5697, 102.0970, 102.6182,
         103.0955, 103.5581, 104.0144, 104.4607, 104.9210, 105.3358, 105.7604, 106.1571,
         106.5504, 106.9323, 107.3154, 107.6838, 108.0746, 108.4617, 108.8212, 109.1490,
         109.4876, 109.8316, 110.1782, 110.5240, 110.8764, 111.1875, 111.5102, 111.8332,
         112.1847, 112.5063, 112.8361, 113.1590, 113.4774, 113.8126, 114.1220, 114.4599,
         114.7833, 115.1099, 115.4423, 115.7668, 116.0940, 116.4375, 116.7644, 117.1217,
         117.4835, 117.8276, 118.1632, 118.5016, 118.8521, 119.2035, 119.5550, 119.9006,
         120.2720, 120.6537, 121.0251, 121.4003, 121.7861, 122.1937, 122.5988, 123.0018,
         123.4313, 123.8532, 124.2572, 124.7022, 125.1709, 125.6631, 126.1176, 126.6266,
         127.1415, 127.6751, 128.2575, 128.8550, 129.4698, 130.1049, 130.7774, 131.5021,
         132.2703, 133.0669, 133.9487, 134.9320, 135.9632, 137.1707, 138.5420, 140.1554,
         142.0843, 144.7257, 148.8859, 153.2298, 162.1611, },
        {116.7454, 119.9432, 122.0689, 123.7209, 125.1068, 126.2780, 127.3116, 128.2518,
         129.1241, 129.9169, 130.6286, 131.3276, 131.9999, 132.6171, 133.2155, 133.8009,
         134.3858, 134.9159, 135.4380, 135.9373, 136.4398, 136.9463, 137.4282, 137.8870,
         138.3208, 138.7462, 139.2047, 139.6426, 140.0666, 140.4687, 140.8976, 141.3097,
         141.7042, 142.0911, 142.4813, 142.8543, 143.2681, 143.6421, 144.0151, 144.3768,
         144.7498, 145.1141, 145.4815, 145.8465, 146.1998, 146.5798, 146.9563, 147.3440,
         147.7087, 148.0823, 148.4671, 148.8500, 149.2382, 149.5990, 149.9690, 150.3435,
         150.7233, 151.0997, 151.4879, 151.8835, 152.2813, 152.6849, 153.0891, 153.4905,
         153.9158, 154.3380, 154.7671, 155.1865, 155.6120, 156.0282, 156.4913, 156.9486,
         157.4051, 157.8818, 158.3809, 158.8842, 159.3936, 159.9183, 160.4566, 161.0003,
         161.5724, 162.1542, 162.8004, 163.4701, 164.1451, 164.8350, 165.6112, 166.4553,
         167.2837, 168.2077, 169.1850, 170.2251, 171.3854, 172.7287, 174.1683, 175.9801,
         178.2444, 181.3137, 185.9759, 190.6197, 200.1778, },
    },
};

}  // namespace cvar::tables
