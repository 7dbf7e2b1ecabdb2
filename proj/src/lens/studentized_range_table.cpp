// Generated by tools/gen_studentized_range_table.py. Do not edit.

#include "faultlens/lens/studentized_range_table.hpp"

namespace faultlens::lens::detail {

const std::array<double, kTabulatedDfCount> kTabulatedDf = {
    2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0, 18.0, 19.0, 20.0, 21.0, 22.0, 23.0, 24.0, 25.0, 26.0, 27.0, 28.0, 29.0, 30.0, 35.0, 40.0, 50.0, 60.0, 80.0, 120.0, 240.0, std::numeric_limits<double>::infinity()};

const std::array<QRow, kQRowCount> kQRows = {{
    {0.05, 2, {6.0849, 4.5007, 3.9265, 3.6354, 3.4605, 3.3441, 3.2612, 3.1992, 3.1511, 3.1127, 3.0813, 3.0552, 3.0332, 3.0143, 2.9980, 2.9837, 2.9712, 2.9600, 2.9500, 2.9410, 2.9329, 2.9255, 2.9188, 2.9126, 2.9070, 2.9017, 2.8969, 2.8924, 2.8882, 2.8710, 2.8582, 2.8405, 2.8288, 2.8144, 2.8000, 2.7859, 2.7718}},
    {0.05, 3, {8.3308, 5.9096, 5.0402, 4.6017, 4.3392, 4.1649, 4.0410, 3.9485, 3.8768, 3.8196, 3.7729, 3.7341, 3.7014, 3.6734, 3.6491, 3.6280, 3.6093, 3.5927, 3.5779, 3.5646, 3.5526, 3.5417, 3.5317, 3.5226, 3.5142, 3.5064, 3.4993, 3.4926, 3.4864, 3.4610, 3.4421, 3.4159, 3.3987, 3.3773, 3.3561, 3.3352, 3.3145}},
    {0.05, 4, {9.7980, 6.8245, 5.7571, 5.2183, 4.8956, 4.6813, 4.5288, 4.4149, 4.3266, 4.2561, 4.1987, 4.1509, 4.1105, 4.0760, 4.0461, 4.0200, 3.9970, 3.9766, 3.9583, 3.9419, 3.9270, 3.9136, 3.9013, 3.8900, 3.8796, 3.8701, 3.8612, 3.8530, 3.8454, 3.8140, 3.7907, 3.7584, 3.7371, 3.7107, 3.6846, 3.6587, 3.6332}},
    {0.05, 5, {10.8811, 7.5017, 6.2870, 5.6731, 5.3049, 5.0601, 4.8858, 4.7554, 4.6543, 4.5736, 4.5077, 4.4529, 4.4066, 4.3670, 4.3327, 4.3027, 4.2763, 4.2528, 4.2319, 4.2130, 4.1959, 4.1805, 4.1663, 4.1534, 4.1415, 4.1305, 4.1203, 4.1109, 4.1021, 4.0659, 4.0391, 4.0020, 3.9774, 3.9470, 3.9169, 3.8871, 3.8577}},
    {0.05, 6, {11.7343, 8.0371, 6.7064, 6.0329, 5.6284, 5.3591, 5.1672, 5.0235, 4.9120, 4.8230, 4.7502, 4.6897, 4.6385, 4.5947, 4.5568, 4.5237, 4.4944, 4.4685, 4.4452, 4.4244, 4.4055, 4.3883, 4.3727, 4.3583, 4.3451, 4.3329, 4.3217, 4.3112, 4.3015, 4.2614, 4.2316, 4.1904, 4.1632, 4.1294, 4.0960, 4.0629, 4.0301}},
    {0.05, 7, {12.4349, 8.4783, 7.0526, 6.3299, 5.8953, 5.6057, 5.3991, 5.2444, 5.1242, 5.0281, 4.9496, 4.8842, 4.8290, 4.7816, 4.7406, 4.7048, 4.6731, 4.6450, 4.6199, 4.5973, 4.5769, 4.5583, 4.5413, 4.5258, 4.5115, 4.4983, 4.4861, 4.4747, 4.4642, 4.4207, 4.3885, 4.3437, 4.3141, 4.2775, 4.2412, 4.2052, 4.1696}},
    {0.05, 8, {13.0273, 8.8525, 7.3465, 6.5823, 6.1222, 5.8153, 5.5962, 5.4319, 5.3042, 5.2021, 5.1187, 5.0491, 4.9903, 4.9399, 4.8962, 4.8580, 4.8243, 4.7944, 4.7676, 4.7435, 4.7217, 4.7018, 4.6838, 4.6672, 4.6519, 4.6378, 4.6248, 4.6127, 4.6014, 4.5550, 4.5205, 4.4727, 4.4411, 4.4019, 4.3630, 4.3245, 4.2863}},
    {0.05, 9, {13.5390, 9.1766, 7.6015, 6.8014, 6.3192, 5.9973, 5.7673, 5.5947, 5.4605, 5.3531, 5.2653, 5.1921, 5.1301, 5.0770, 5.0310, 4.9907, 4.9552, 4.9236, 4.8954, 4.8699, 4.8469, 4.8260, 4.8069, 4.7894, 4.7733, 4.7584, 4.7446, 4.7318, 4.7199, 4.6709, 4.6345, 4.5839, 4.5504, 4.5089, 4.4678, 4.4270, 4.3865}},
    {0.05, 10, {13.9885, 9.4620, 7.8263, 6.9947, 6.4931, 6.1579, 5.9183, 5.7384, 5.5984, 5.4863, 5.3946, 5.3181, 5.2534, 5.1979, 5.1498, 5.1077, 5.0705, 5.0375, 5.0079, 4.9813, 4.9572, 4.9353, 4.9152, 4.8969, 4.8800, 4.8644, 4.8500, 4.8366, 4.8241, 4.7727, 4.7345, 4.6814, 4.6463, 4.6028, 4.5595, 4.5167, 4.4741}},
    {0.05, 11, {14.3886, 9.7166, 8.0271, 7.1674, 6.6485, 6.3016, 6.0533, 5.8669, 5.7217, 5.6054, 5.5102, 5.4308, 5.3636, 5.3059, 5.2559, 5.2121, 5.1735, 5.1391, 5.1083, 5.0806, 5.0555, 5.0327, 5.0119, 4.9928, 4.9753, 4.9590, 4.9440, 4.9300, 4.9170, 4.8635, 4.8236, 4.7683, 4.7317, 4.6862, 4.6411, 4.5963, 4.5519}},
    {0.05, 12, {14.7487, 9.9460, 8.2083, 7.3234, 6.7890, 6.4314, 6.1753, 5.9830, 5.8331, 5.7130, 5.6146, 5.5326, 5.4631, 5.4034, 5.3517, 5.3064, 5.2664, 5.2308, 5.1990, 5.1703, 5.1443, 5.1207, 5.0991, 5.0793, 5.0611, 5.0443, 5.0287, 5.0143, 5.0008, 4.9453, 4.9039, 4.8465, 4.8085, 4.7613, 4.7144, 4.6679, 4.6217}},
    {0.05, 13, {15.0757, 10.1547, 8.3732, 7.4655, 6.9169, 6.5497, 6.2866, 6.0888, 5.9346, 5.8111, 5.7098, 5.6253, 5.5538, 5.4923, 5.4390, 5.3923, 5.3511, 5.3144, 5.2815, 5.2519, 5.2252, 5.2008, 5.1785, 5.1581, 5.1393, 5.1219, 5.1059, 5.0909, 5.0770, 5.0197, 4.9769, 4.9176, 4.8783, 4.8294, 4.7809, 4.7328, 4.6849}},
    {0.05, 14, {15.3748, 10.3459, 8.5245, 7.5959, 7.0344, 6.6583, 6.3887, 6.1860, 6.0279, 5.9012, 5.7973, 5.7105, 5.6370, 5.5739, 5.5191, 5.4712, 5.4288, 5.3911, 5.3573, 5.3269, 5.2993, 5.2743, 5.2514, 5.2303, 5.2110, 5.1931, 5.1766, 5.1612, 5.1469, 5.0878, 5.0439, 4.9827, 4.9422, 4.8918, 4.8418, 4.7921, 4.7427}},
    {0.05, 15, {15.6503, 10.5222, 8.6640, 7.7163, 7.1428, 6.7586, 6.4831, 6.2758, 6.1141, 5.9844, 5.8780, 5.7892, 5.7139, 5.6493, 5.5932, 5.5440, 5.5006, 5.4619, 5.4273, 5.3961, 5.3678, 5.3421, 5.3186, 5.2970, 5.2772, 5.2589, 5.2419, 5.2261, 5.2114, 5.1508, 5.1056, 5.0427, 5.0011, 4.9493, 4.8979, 4.8468, 4.7959}},
    {0.05, 16, {15.9054, 10.6856, 8.7935, 7.8280, 7.2436, 6.8518, 6.5707, 6.3592, 6.1941, 6.0617, 5.9531, 5.8623, 5.7854, 5.7193, 5.6620, 5.6117, 5.5672, 5.5277, 5.4923, 5.4603, 5.4314, 5.4051, 5.3810, 5.3590, 5.3386, 5.3199, 5.3025, 5.2863, 5.2713, 5.2091, 5.1628, 5.0984, 5.0557, 5.0026, 4.9498, 4.8973, 4.8452}},
    {0.05, 17, {16.1428, 10.8378, 8.9142, 7.9322, 7.3375, 6.9387, 6.6525, 6.4371, 6.2689, 6.1339, 6.0231, 5.9306, 5.8521, 5.7847, 5.7261, 5.6748, 5.6295, 5.5891, 5.5529, 5.5203, 5.4908, 5.4639, 5.4393, 5.4167, 5.3960, 5.3768, 5.3590, 5.3425, 5.3271, 5.2636, 5.2162, 5.1503, 5.1066, 5.0523, 4.9982, 4.9444, 4.8910}},
    {0.05, 18, {16.3646, 10.9802, 9.0272, 8.0298, 7.4256, 7.0202, 6.7292, 6.5100, 6.3389, 6.2015, 6.0888, 5.9946, 5.9146, 5.8460, 5.7863, 5.7340, 5.6878, 5.6466, 5.6097, 5.5765, 5.5464, 5.5189, 5.4939, 5.4709, 5.4497, 5.4301, 5.4120, 5.3951, 5.3794, 5.3146, 5.2662, 5.1989, 5.1543, 5.0987, 5.0434, 4.9885, 4.9337}},
    {0.05, 19, {16.5728, 11.1140, 9.1333, 8.1215, 7.5084, 7.0968, 6.8013, 6.5787, 6.4048, 6.2652, 6.1506, 6.0547, 5.9735, 5.9036, 5.8429, 5.7897, 5.7426, 5.7007, 5.6632, 5.6293, 5.5987, 5.5707, 5.5452, 5.5218, 5.5002, 5.4802, 5.4618, 5.4446, 5.4286, 5.3625, 5.3132, 5.2445, 5.1990, 5.1423, 5.0859, 5.0298, 4.9739}},
    {0.05, 20, {16.7688, 11.2400, 9.2334, 8.2080, 7.5864, 7.1691, 6.8694, 6.6435, 6.4670, 6.3252, 6.2089, 6.1116, 6.0290, 5.9580, 5.8963, 5.8422, 5.7944, 5.7518, 5.7136, 5.6792, 5.6480, 5.6196, 5.5936, 5.5698, 5.5478, 5.5275, 5.5087, 5.4913, 5.4750, 5.4077, 5.3575, 5.2876, 5.2412, 5.1834, 5.1259, 5.0687, 5.0117}},
    {0.01, 2, {14.0358, 8.2603, 6.5112, 5.7023, 5.2431, 4.9490, 4.7452, 4.5960, 4.4820, 4.3923, 4.3198, 4.2600, 4.2099, 4.1673, 4.1306, 4.0987, 4.0707, 4.0460, 4.0239, 4.0041, 3.9863, 3.9702, 3.9555, 3.9420, 3.9297, 3.9183, 3.9078, 3.8981, 3.8891, 3.8520, 3.8247, 3.7870, 3.7622, 3.7317, 3.7016, 3.6720, 3.6428}},
    {0.01, 3, {19.0189, 10.6185, 8.1198, 6.9757, 6.3305, 5.9193, 5.6354, 5.4280, 5.2702, 5.1460, 5.0459, 4.9635, 4.8945, 4.8359, 4.7855, 4.7418, 4.7034, 4.6694, 4.6392, 4.6122, 4.5878, 4.5657, 4.5456, 4.5272, 4.5104, 4.4948, 4.4805, 4.4672, 4.4549, 4.4044, 4.3672, 4.3159, 4.2822, 4.2407, 4.1999, 4.1598, 4.1203}},
    {0.01, 4, {22.2937, 12.1695, 9.1729, 7.8042, 7.0333, 6.5424, 6.2038, 5.9567, 5.7686, 5.6208, 5.5016, 5.4036, 5.3215, 5.2518, 5.1919, 5.1399, 5.0942, 5.0539, 5.0180, 4.9859, 4.9569, 4.9307, 4.9068, 4.8850, 4.8650, 4.8466, 4.8296, 4.8138, 4.7992, 4.7393, 4.6951, 4.6343, 4.5944, 4.5453, 4.4970, 4.4495, 4.4028}},
    {0.01, 5, {24.7172, 13.3243, 9.9583, 8.4215, 7.5560, 7.0050, 6.6248, 6.3473, 6.1361, 5.9701, 5.8363, 5.7262, 5.6340, 5.5558, 5.4885, 5.4301, 5.3788, 5.3336, 5.2933, 5.2572, 5.2246, 5.1952, 5.1684, 5.1439, 5.1215, 5.1008, 5.0817, 5.0640, 5.0476, 4.9804, 4.9308, 4.8625, 4.8178, 4.7627, 4.7085, 4.6552, 4.6028}},
    {0.01, 6, {26.6290, 14.2407, 10.5832, 8.9131, 7.9723, 7.3730, 6.9594, 6.6574, 6.4275, 6.2468, 6.1011, 5.9812, 5.8808, 5.7956, 5.7223, 5.6586, 5.6028, 5.5535, 5.5095, 5.4702, 5.4348, 5.4027, 5.3735, 5.3468, 5.3223, 5.2998, 5.2790, 5.2597, 5.2418, 5.1685, 5.1145, 5.0401, 4.9913, 4.9313, 4.8722, 4.8141, 4.7570}},
    {0.01, 7, {28.2006, 14.9978, 11.1009, 9.3209, 8.3177, 7.6784, 7.2369, 6.9145, 6.6690, 6.4759, 6.3202, 6.1920, 6.0847, 5.9936, 5.9152, 5.8471, 5.7874, 5.7346, 5.6876, 5.6455, 5.6076, 5.5733, 5.5420, 5.5135, 5.4873, 5.4632, 5.4409, 5.4203, 5.4012, 5.3227, 5.2648, 5.1852, 5.1330, 5.0687, 5.0055, 4.9433, 4.8822}},
    {0.01, 8, {29.5301, 15.6410, 11.5418, 9.6687, 8.6125, 7.9390, 7.4738, 7.1339, 6.8749, 6.6713, 6.5069, 6.3717, 6.2583, 6.1621, 6.0793, 6.0074, 5.9443, 5.8886, 5.8389, 5.7944, 5.7544, 5.7181, 5.6850, 5.6549, 5.6272, 5.6017, 5.5782, 5.5564, 5.5361, 5.4532, 5.3920, 5.3078, 5.2525, 5.1845, 5.1176, 5.0519, 4.9872}},
    {0.01, 9, {30.6794, 16.1990, 11.9251, 9.9715, 8.8693, 8.1662, 7.6803, 7.3251, 7.0544, 6.8414, 6.6696, 6.5280, 6.4095, 6.3087, 6.2221, 6.1468, 6.0807, 6.0223, 5.9703, 5.9238, 5.8818, 5.8438, 5.8092, 5.7775, 5.7485, 5.7218, 5.6972, 5.6743, 5.6531, 5.5662, 5.5020, 5.4137, 5.3558, 5.2845, 5.2143, 5.1453, 5.0775}},
    {0.01, 10, {31.6894, 16.6908, 12.2637, 10.2393, 9.0966, 8.3674, 7.8632, 7.4945, 7.2133, 6.9921, 6.8136, 6.6664, 6.5432, 6.4384, 6.3483, 6.2700, 6.2013, 6.1406, 6.0865, 6.0380, 5.9943, 5.9547, 5.9187, 5.8858, 5.8556, 5.8278, 5.8021, 5.7784, 5.7563, 5.6657, 5.5989, 5.5069, 5.4466, 5.3723, 5.2992, 5.2273, 5.1566}},
    {0.01, 11, {32.5887, 17.1299, 12.5665, 10.4790, 9.3003, 8.5477, 8.0272, 7.6463, 7.3559, 7.1272, 6.9426, 6.7905, 6.6631, 6.5547, 6.4615, 6.3804, 6.3093, 6.2465, 6.1905, 6.1403, 6.0950, 6.0541, 6.0168, 5.9827, 5.9514, 5.9226, 5.8960, 5.8714, 5.8485, 5.7547, 5.6855, 5.5901, 5.5276, 5.4506, 5.3748, 5.3003, 5.2270}},
    {0.01, 12, {33.3983, 17.5261, 12.8402, 10.6959, 9.4847, 8.7110, 8.1757, 7.7839, 7.4850, 7.2497, 7.0596, 6.9029, 6.7716, 6.6600, 6.5639, 6.4804, 6.4071, 6.3423, 6.2846, 6.2328, 6.1862, 6.1439, 6.1054, 6.0703, 6.0380, 6.0083, 5.9809, 5.9555, 5.9318, 5.8351, 5.7636, 5.6652, 5.6007, 5.5211, 5.4429, 5.3659, 5.2902}},
    {0.01, 13, {34.1335, 17.8866, 13.0895, 10.8938, 9.6530, 8.8602, 8.3114, 7.9096, 7.6030, 7.3615, 7.1665, 7.0056, 6.8708, 6.7562, 6.6575, 6.5717, 6.4964, 6.4298, 6.3705, 6.3173, 6.2693, 6.2259, 6.1864, 6.1502, 6.1171, 6.0865, 6.0583, 6.0322, 6.0079, 5.9083, 5.8348, 5.7336, 5.6672, 5.5853, 5.5048, 5.4255, 5.3476}},
    {0.01, 14, {34.8064, 18.2171, 13.3184, 11.0756, 9.8077, 8.9973, 8.4362, 8.0253, 7.7116, 7.4645, 7.2648, 7.1001, 6.9621, 6.8447, 6.7436, 6.6557, 6.5785, 6.5103, 6.4495, 6.3950, 6.3458, 6.3013, 6.2608, 6.2237, 6.1897, 6.1584, 6.1294, 6.1026, 6.0777, 5.9756, 5.9002, 5.7963, 5.7282, 5.6442, 5.5615, 5.4801, 5.4001}},
    {0.01, 15, {35.4261, 18.5219, 13.5298, 11.2436, 9.9508, 9.1242, 8.5517, 8.1323, 7.8121, 7.5598, 7.3558, 7.1876, 7.0466, 6.9266, 6.8233, 6.7334, 6.6546, 6.5848, 6.5226, 6.4668, 6.4166, 6.3710, 6.3296, 6.2917, 6.2569, 6.2248, 6.1952, 6.1678, 6.1423, 6.0378, 5.9606, 5.8543, 5.7845, 5.6985, 5.6138, 5.5305, 5.4485}},
    {0.01, 16, {36.0000, 18.8047, 13.7261, 11.3997, 10.0838, 9.2423, 8.6592, 8.2320, 7.9057, 7.6485, 7.4406, 7.2691, 7.1252, 7.0028, 6.8975, 6.8058, 6.7253, 6.6541, 6.5906, 6.5337, 6.4824, 6.4359, 6.3936, 6.3549, 6.3193, 6.2866, 6.2564, 6.2284, 6.2023, 6.0956, 6.0168, 5.9081, 5.8368, 5.7489, 5.6623, 5.5771, 5.4933}},
    {0.01, 17, {36.5343, 19.0682, 13.9092, 11.5454, 10.2081, 9.3526, 8.7597, 8.3251, 7.9931, 7.7314, 7.5198, 7.3452, 7.1988, 7.0741, 6.9668, 6.8734, 6.7914, 6.7189, 6.6542, 6.5962, 6.5439, 6.4965, 6.4534, 6.4139, 6.3777, 6.3444, 6.3135, 6.2850, 6.2584, 6.1496, 6.0692, 5.9584, 5.8856, 5.7959, 5.7075, 5.6206, 5.5350}},
    {0.01, 18, {37.0337, 19.3148, 14.0807, 11.6820, 10.3246, 9.4560, 8.8539, 8.4125, 8.0752, 7.8093, 7.5942, 7.4167, 7.2678, 7.1411, 7.0319, 6.9369, 6.8535, 6.7797, 6.7139, 6.6549, 6.6017, 6.5534, 6.5095, 6.4694, 6.4325, 6.3985, 6.3672, 6.3381, 6.3111, 6.2002, 6.1183, 6.0054, 5.9313, 5.8399, 5.7499, 5.6612, 5.5740}},
    {0.01, 19, {37.5023, 19.5465, 14.2419, 11.8105, 10.4343, 9.5534, 8.9427, 8.4948, 8.1526, 7.8826, 7.6643, 7.4841, 7.3328, 7.2041, 7.0932, 6.9967, 6.9120, 6.8370, 6.7701, 6.7101, 6.6561, 6.6070, 6.5624, 6.5216, 6.4841, 6.4496, 6.4177, 6.3881, 6.3606, 6.2479, 6.1646, 6.0497, 5.9743, 5.8813, 5.7897, 5.6995, 5.6107}},
    {0.01, 20, {37.9435, 19.7648, 14.3939, 11.9318, 10.5378, 9.6454, 9.0265, 8.5726, 8.2256, 7.9519, 7.7305, 7.5477, 7.3943, 7.2637, 7.1512, 7.0533, 6.9673, 6.8911, 6.8232, 6.7624, 6.7075, 6.6577, 6.6123, 6.5709, 6.5328, 6.4978, 6.4653, 6.4353, 6.4074, 6.2929, 6.2083, 6.0916, 6.0149, 5.9203, 5.8272, 5.7355, 5.6452}},
    {0.001, 2, {44.6878, 18.2773, 12.1768, 9.7140, 8.4270, 7.6479, 7.1295, 6.7612, 6.4868, 6.2748, 6.1063, 5.9692, 5.8555, 5.7598, 5.6781, 5.6075, 5.5460, 5.4920, 5.4440, 5.4013, 5.3629, 5.3282, 5.2968, 5.2681, 5.2419, 5.2179, 5.1957, 5.1752, 5.1562, 5.0786, 5.0218, 4.9441, 4.8935, 4.8314, 4.7708, 4.7115, 4.6535}},
    {0.001, 3, {60.4178, 23.3132, 14.9828, 11.6720, 9.9595, 8.9304, 8.2495, 7.7680, 7.4106, 7.1353, 6.9169, 6.7397, 6.5931, 6.4699, 6.3648, 6.2743, 6.1955, 6.1262, 6.0649, 6.0102, 5.9612, 5.9170, 5.8769, 5.8404, 5.8070, 5.7764, 5.7481, 5.7221, 5.6979, 5.5995, 5.5275, 5.4291, 5.3652, 5.2870, 5.2106, 5.1362, 5.0635}},
    {0.001, 4, {70.7692, 26.6427, 16.8374, 12.9622, 10.9650, 9.7679, 8.9775, 8.4194, 8.0057, 7.6874, 7.4353, 7.2308, 7.0618, 6.9198, 6.7989, 6.6947, 6.6040, 6.5244, 6.4539, 6.3912, 6.3349, 6.2841, 6.2381, 6.1962, 6.1580, 6.1229, 6.0905, 6.0606, 6.0330, 5.9203, 5.8379, 5.7256, 5.6525, 5.5633, 5.4763, 5.3915, 5.3088}},
    {0.001, 5, {78.4338, 29.1277, 18.2268, 13.9300, 11.7191, 10.3953, 9.5219, 8.9058, 8.4492, 8.0982, 7.8202, 7.5949, 7.4087, 7.2523, 7.1192, 7.0045, 6.9047, 6.8171, 6.7397, 6.6706, 6.6087, 6.5530, 6.5024, 6.4564, 6.4144, 6.3758, 6.3403, 6.3075, 6.2771, 6.1534, 6.0631, 5.9399, 5.8598, 5.7621, 5.6669, 5.5741, 5.4838}},
    {0.001, 6, {84.4825, 31.1025, 19.3355, 14.7039, 12.3226, 10.8975, 9.9576, 9.2946, 8.8035, 8.4260, 8.1271, 7.8848, 7.6847, 7.5166, 7.3736, 7.2504, 7.1432, 7.0491, 6.9659, 6.8918, 6.8253, 6.7654, 6.7112, 6.6618, 6.6166, 6.5752, 6.5371, 6.5019, 6.4693, 6.3367, 6.2398, 6.1077, 6.0219, 5.9172, 5.8153, 5.7160, 5.6193}},
    {0.001, 7, {89.4554, 32.7356, 20.2558, 15.3478, 12.8253, 11.3160, 10.3207, 9.6187, 9.0987, 8.6989, 8.3824, 8.1260, 7.9141, 7.7362, 7.5847, 7.4543, 7.3409, 7.2413, 7.1532, 7.0748, 7.0045, 6.9411, 6.8837, 6.8315, 6.7837, 6.7399, 6.6996, 6.6624, 6.6279, 6.4876, 6.3851, 6.2455, 6.1549, 6.0443, 5.9366, 5.8318, 5.7298}},
    {0.001, 8, {93.6635, 34.1241, 21.0409, 15.8983, 13.2557, 11.6745, 10.6318, 9.8964, 9.3516, 8.9327, 8.6011, 8.3324, 8.1103, 7.9239, 7.7653, 7.6286, 7.5098, 7.4054, 7.3132, 7.2310, 7.1573, 7.0909, 7.0308, 6.9760, 6.9260, 6.8802, 6.8379, 6.7989, 6.7628, 6.6159, 6.5086, 6.3624, 6.2675, 6.1518, 6.0391, 5.9294, 5.8227}},
    {0.001, 9, {97.3012, 35.3293, 21.7243, 16.3783, 13.6315, 11.9879, 10.9039, 10.1392, 9.5727, 9.1371, 8.7923, 8.5128, 8.2818, 8.0879, 7.9229, 7.7808, 7.6571, 7.5486, 7.4526, 7.3671, 7.2905, 7.2215, 7.1589, 7.1020, 7.0500, 7.0022, 6.9583, 6.9177, 6.8802, 6.7274, 6.6158, 6.4638, 6.3651, 6.2448, 6.1277, 6.0137, 5.9029}},
    {0.001, 10, {100.4984, 36.3921, 22.3284, 16.8035, 13.9647, 12.2660, 11.1454, 10.3549, 9.7691, 9.3187, 8.9621, 8.6730, 8.4341, 8.2335, 8.0628, 7.9158, 7.7879, 7.6756, 7.5763, 7.4878, 7.4086, 7.3371, 7.2724, 7.2135, 7.1597, 7.1103, 7.0649, 7.0229, 6.9840, 6.8259, 6.7105, 6.5532, 6.4512, 6.3268, 6.2057, 6.0879, 5.9733}},
    {0.001, 11, {103.3456, 37.3413, 22.8692, 17.1847, 14.2638, 12.5157, 11.3625, 10.5487, 9.9457, 9.4820, 9.1147, 8.8170, 8.5710, 8.3644, 8.1885, 8.0371, 7.9053, 7.7897, 7.6874, 7.5962, 7.5145, 7.4409, 7.3742, 7.3136, 7.2581, 7.2072, 7.1604, 7.1172, 7.0771, 6.9142, 6.7953, 6.6333, 6.5282, 6.4000, 6.2753, 6.1539, 6.0360}},
    {0.001, 12, {105.9087, 38.1979, 23.3582, 17.5299, 14.5349, 12.7423, 11.5595, 10.7248, 10.1061, 9.6302, 9.2534, 8.9478, 8.6953, 8.4832, 8.3027, 8.1472, 8.0119, 7.8932, 7.7881, 7.6945, 7.6107, 7.5351, 7.4666, 7.4043, 7.3473, 7.2951, 7.2470, 7.2026, 7.1615, 6.9942, 6.8720, 6.7057, 6.5978, 6.4661, 6.3381, 6.2135, 6.0925}},
    {0.001, 13, {108.2367, 38.9776, 23.8040, 17.8450, 14.7827, 12.9495, 11.7398, 10.8859, 10.2529, 9.7660, 9.3803, 9.0676, 8.8091, 8.5920, 8.4072, 8.2480, 8.1095, 7.9879, 7.8803, 7.7845, 7.6986, 7.6212, 7.5511, 7.4872, 7.4289, 7.3754, 7.3262, 7.2807, 7.2386, 7.0672, 6.9421, 6.7717, 6.6612, 6.5264, 6.3953, 6.2677, 6.1438}},
    {0.001, 14, {110.3671, 39.6926, 24.2135, 18.1348, 15.0108, 13.1404, 11.9059, 11.0344, 10.3883, 9.8912, 9.4974, 9.1781, 8.9141, 8.6924, 8.5036, 8.3409, 8.1994, 8.0752, 7.9653, 7.8674, 7.7796, 7.7005, 7.6289, 7.5637, 7.5041, 7.4494, 7.3991, 7.3526, 7.3095, 7.1345, 7.0066, 6.8325, 6.7195, 6.5817, 6.4477, 6.3175, 6.1908}},
    {0.001, 15, {112.3295, 40.3523, 24.5918, 18.4028, 15.2219, 13.3171, 12.0598, 11.1721, 10.5138, 10.0073, 9.6060, 9.2805, 9.0114, 8.7854, 8.5929, 8.4271, 8.2828, 8.1562, 8.0441, 7.9443, 7.8548, 7.7741, 7.7010, 7.6345, 7.5737, 7.5179, 7.4666, 7.4192, 7.3753, 7.1967, 7.0663, 6.8887, 6.7734, 6.6329, 6.4962, 6.3633, 6.2342}},
    {0.001, 16, {114.1471, 40.9643, 24.9432, 18.6520, 15.4183, 13.4817, 12.2032, 11.3003, 10.6308, 10.1155, 9.7072, 9.3760, 9.1022, 8.8721, 8.6762, 8.5075, 8.3606, 8.2316, 8.1175, 8.0159, 7.9248, 7.8426, 7.7682, 7.7005, 7.6386, 7.5818, 7.5295, 7.4812, 7.4365, 7.2547, 7.1218, 6.9409, 6.8236, 6.6804, 6.5412, 6.4059, 6.2745}},
    {0.001, 17, {115.8388, 41.5347, 25.2711, 18.8848, 15.6019, 13.6356, 12.3373, 11.4204, 10.7403, 10.2168, 9.8019, 9.4654, 9.1872, 8.9534, 8.7542, 8.5827, 8.4334, 8.3023, 8.1863, 8.0829, 7.9903, 7.9068, 7.8311, 7.7622, 7.6993, 7.6416, 7.5884, 7.5393, 7.4938, 7.3089, 7.1738, 6.9898, 6.8704, 6.7248, 6.5833, 6.4457, 6.3120}},
    {0.001, 18, {117.4203, 42.0686, 25.5783, 19.1030, 15.7742, 13.7802, 12.4633, 11.5332, 10.8432, 10.3120, 9.8910, 9.5495, 9.2671, 9.0297, 8.8276, 8.6534, 8.5018, 8.3687, 8.2509, 8.1460, 8.0519, 7.9671, 7.8902, 7.8203, 7.7564, 7.6977, 7.6437, 7.5938, 7.5476, 7.3598, 7.2225, 7.0356, 6.9143, 6.7665, 6.6227, 6.4829, 6.3471}},
    {0.001, 19, {118.9043, 42.5701, 25.8672, 19.3084, 15.9364, 13.9163, 12.5821, 11.6395, 10.9402, 10.4018, 9.9751, 9.6288, 9.3424, 9.1018, 8.8968, 8.7201, 8.5664, 8.4314, 8.3119, 8.2054, 8.1100, 8.0239, 7.9460, 7.8750, 7.8102, 7.7507, 7.6959, 7.6453, 7.5984, 7.4077, 7.2685, 7.0788, 6.9557, 6.8057, 6.6597, 6.5179, 6.3801}},
    {0.001, 20, {120.3016, 43.0429, 26.1398, 19.5024, 16.0897, 14.0450, 12.6943, 11.7401, 11.0320, 10.4868, 10.0546, 9.7039, 9.4138, 9.1700, 8.9623, 8.7833, 8.6275, 8.4907, 8.3696, 8.2617, 8.1650, 8.0778, 7.9987, 7.9268, 7.8611, 7.8007, 7.7452, 7.6939, 7.6464, 7.4531, 7.3119, 7.1196, 6.9948, 6.8427, 6.6947, 6.5509, 6.4112}},
}};

}  // namespace faultlens::lens::detail
