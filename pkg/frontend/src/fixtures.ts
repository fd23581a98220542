/** Stored backend responses for mock-server mode and snapshot tests.
 *
 * Captured from a live service run: a 5-bowl scene and one command with
 * 50 stochastic passes.  Playback and overlays render from these alone.
 */
import { CommandResponse, SceneDoc } from "./types.js";

interface Fixture { scene: SceneDoc; command: CommandResponse; }

export const FIXTURE: Fixture = {"scene": {"bowls": [{"color": "green", "shape": "square", "size": "large", "x": -0.2888949620597598, "y": 0.3359592580787139}, {"color": "green", "shape": "round", "size": "small", "x": 0.2347654500248223, "y": 0.4507558169106519}, {"color": "pink", "shape": "square", "size": "large", "x": 0.02150550494856518, "y": 0.21988439272110932}, {"color": "red", "shape": "square", "size": "large", "x": 0.3224829781900118, "y": 0.22113939177319772}, {"color": "red", "shape": "round", "size": "small", "x": -0.039833512417202455, "y": 0.47489417178159776}], "cube": {"x": 0.0, "y": 0.08}, "seed": 5, "table": {"h": 0.6, "w": 0.9}, "target_index": 2}, "command": {"trajectory": [[0.0, 0.4, 2.1, 1.1, 0.0, 0.1, 1.0], [0.0115, 0.4051, 2.0416, 1.1038, -0.0106, 0.0819, 0.9853], [0.0426, 0.4188, 1.8849, 1.114, -0.0392, 0.0335, 0.9458], [0.0883, 0.439, 1.6537, 1.1291, -0.0812, -0.038, 0.8876], [0.145, 0.4641, 1.3677, 1.1476, -0.133, -0.1263, 0.8156], [0.2093, 0.4927, 1.0429, 1.1686, -0.1917, -0.2265, 0.7338], [0.2787, 0.5236, 0.6925, 1.1912, -0.255, -0.3347, 0.6457], [0.351, 0.556, 0.3268, 1.2147, -0.321, -0.4474, 0.5537], [0.4247, 0.5891, -0.0457, 1.2386, -0.388, -0.5622, 0.46], [0.4982, 0.6223, -0.4183, 1.2624, -0.455, -0.677, 0.3663], [0.5707, 0.6551, -0.786, 1.2859, -0.521, -0.7903, 0.2739], [0.6413, 0.6872, -1.1448, 1.3087, -0.5853, -0.9008, 0.1838], [0.7094, 0.7183, -1.4917, 1.3308, -0.6474, -1.0077, 0.0967], [0.7747, 0.7481, -1.8246, 1.352, -0.707, -1.1102, 0.0132], [0.8368, 0.7766, -2.142, 1.3722, -0.7638, -1.208, -0.0664], [0.8956, 0.8035, -2.4429, 1.3914, -0.8176, -1.3007, -0.1419], [0.951, 0.8289, -2.7268, 1.4096, -0.8684, -1.3882, -0.2131], [1.003, 0.8528, -2.9937, 1.4267, -0.9162, -1.4705, -0.28], [1.0516, 0.8751, -3.2435, 1.4428, -0.9609, -1.5475, -0.3426], [1.0969, 0.8958, -3.4767, 1.4579, -1.0026, -1.6194, -0.401], [1.1391, 0.9151, -3.6937, 1.4719, -1.0415, -1.6864, -0.4553], [1.1782, 0.933, -3.895, 1.4851, -1.0775, -1.7485, -0.5057], [1.2145, 0.9495, -4.0814, 1.4972, -1.111, -1.8061, -0.5524], [1.2479, 0.9647, -4.2537, 1.5085, -1.1419, -1.8594, -0.5955], [1.2788, 0.9787, -4.4124, 1.519, -1.1704, -1.9085, -0.6353], [1.3072, 0.9917, -4.5585, 1.5286, -1.1967, -1.9538, -0.6719], [1.3333, 1.0036, -4.6927, 1.5375, -1.2209, -1.9954, -0.7055], [1.3572, 1.0145, -4.8157, 1.5457, -1.2432, -2.0336, -0.7364], [1.3791, 1.0245, -4.9283, 1.5532, -1.2636, -2.0687, -0.7647], [1.399, 1.0338, -5.0313, 1.5601, -1.2823, -2.1008, -0.7906], [1.4173, 1.0422, -5.1254, 1.5664, -1.2995, -2.1301, -0.8142], [1.4338, 1.05, -5.2111, 1.5722, -1.3153, -2.1569, -0.8358], [1.449, 1.0571, -5.2892, 1.5775, -1.3297, -2.1814, -0.8555], [1.4627, 1.0636, -5.3602, 1.5823, -1.3428, -2.2036, -0.8735], [1.4752, 1.0696, -5.4248, 1.5867, -1.3548, -2.2239, -0.8898], [1.4866, 1.075, -5.4835, 1.5908, -1.3657, -2.2424, -0.9046], [1.497, 1.08, -5.5367, 1.5945, -1.3756, -2.2591, -0.9181], [1.5064, 1.0845, -5.585, 1.5978, -1.3846, -2.2743, -0.9303], [1.5151, 1.0886, -5.6287, 1.6009, -1.3927, -2.2881, -0.9414], [1.5229, 1.0924, -5.6684, 1.6037, -1.4001, -2.3006, -0.9514], [1.53, 1.0958, -5.7042, 1.6062, -1.4069, -2.3119, -0.9605], [1.5365, 1.0989, -5.7367, 1.6085, -1.4129, -2.3221, -0.9687], [1.5424, 1.1017, -5.7661, 1.6106, -1.4185, -2.3313, -0.9761], [1.5477, 1.1043, -5.7926, 1.6124, -1.4235, -2.3396, -0.9828], [1.5525, 1.1066, -5.8165, 1.6141, -1.428, -2.3471, -0.9889], [1.5568, 1.1087, -5.8381, 1.6155, -1.4321, -2.3538, -0.9944], [1.5608, 1.1106, -5.8576, 1.6168, -1.4358, -2.3598, -0.9993], [1.5643, 1.1123, -5.8751, 1.6179, -1.4391, -2.3652, -1.0037], [1.5675, 1.1138, -5.8909, 1.619, -1.4421, -2.3701, -1.0078], [1.5704, 1.1152, -5.9051, 1.6199, -1.4447, -2.3744, -1.0114], [1.573, 1.1165, -5.9179, 1.6207, -1.4471, -2.3783, -1.0146], [1.5753, 1.1176, -5.9293, 1.6214, -1.4492, -2.3818, -1.0176], [1.5775, 1.1186, -5.9396, 1.622, -1.4511, -2.385, -1.0202], [1.5794, 1.1194, -5.9489, 1.6226, -1.4528, -2.3878, -1.0226], [1.5812, 1.1202, -5.9572, 1.6231, -1.4544, -2.3903, -1.0247], [1.5827, 1.121, -5.9646, 1.6235, -1.4557, -2.3926, -1.0266], [1.5842, 1.1216, -5.9712, 1.6239, -1.4569, -2.3946, -1.0284], [1.5855, 1.1222, -5.9772, 1.6243, -1.458, -2.3964, -1.0299], [1.5866, 1.1227, -5.9826, 1.6246, -1.4589, -2.398, -1.0313], [1.5877, 1.1231, -5.9874, 1.6248, -1.4598, -2.3994, -1.0325], [1.5886, 1.1235, -5.9916, 1.6251, -1.4606, -2.4007, -1.0336], [1.5894, 1.1239, -5.9955, 1.6253, -1.4613, -2.4019, -1.0346], [1.5901, 1.1242, -5.9989, 1.6254, -1.4619, -2.4029, -1.0355], [1.5908, 1.1244, -6.002, 1.6256, -1.4624, -2.4038, -1.0363], [1.5914, 1.1246, -6.0048, 1.6257, -1.4629, -2.4046, -1.0371], [1.5919, 1.1248, -6.0072, 1.6258, -1.4633, -2.4054, -1.0377], [1.5923, 1.1249, -6.0094, 1.6259, -1.4637, -2.406, -1.0383], [1.5927, 1.125, -6.0114, 1.6259, -1.4641, -2.4066, -1.0388], [1.5931, 1.1251, -6.0131, 1.626, -1.4644, -2.4072, -1.0393], [1.5934, 1.1252, -6.0146, 1.626, -1.4647, -2.4076, -1.0397], [1.5936, 1.1253, -6.016, 1.626, -1.465, -2.4081, -1.0401], [1.5938, 1.1253, -6.0172, 1.626, -1.4652, -2.4085, -1.0404], [1.594, 1.1254, -6.0183, 1.626, -1.4655, -2.4088, -1.0407], [1.5942, 1.1254, -6.0193, 1.626, -1.4657, -2.4091, -1.041], [1.5943, 1.1254, -6.0201, 1.626, -1.4659, -2.4094, -1.0412], [1.5944, 1.1254, -6.0209, 1.6259, -1.4661, -2.4097, -1.0415], [1.5945, 1.1255, -6.0216, 1.6259, -1.4663, -2.4099, -1.0417], [1.5946, 1.1255, -6.0222, 1.6259, -1.4665, -2.4101, -1.0418], [1.5946, 1.1255, -6.0227, 1.6259, -1.4667, -2.4103, -1.042], [1.5947, 1.1255, -6.0232, 1.6259, -1.4669, -2.4105, -1.0421], [1.5947, 1.1255, -6.0237, 1.6259, -1.467, -2.4106, -1.0423], [1.5948, 1.1255, -6.0241, 1.6258, -1.4672, -2.4107, -1.0424], [1.5948, 1.1255, -6.0244, 1.6258, -1.4673, -2.4109, -1.0425], [1.5948, 1.1255, -6.0247, 1.6258, -1.4674, -2.411, -1.0426], [1.5949, 1.1256, -6.025, 1.6258, -1.4676, -2.4111, -1.0427], [1.5949, 1.1256, -6.0252, 1.6258, -1.4677, -2.4111, -1.0428], [1.5949, 1.1256, -6.0255, 1.6258, -1.4677, -2.4112, -1.0428], [1.5949, 1.1256, -6.0256, 1.6258, -1.4678, -2.4113, -1.0429], [1.5949, 1.1256, -6.0258, 1.6258, -1.4679, -2.4113, -1.043], [1.5949, 1.1256, -6.026, 1.6258, -1.468, -2.4114, -1.043], [1.595, 1.1256, -6.0261, 1.6258, -1.468, -2.4114, -1.043], [1.595, 1.1256, -6.0262, 1.6258, -1.4681, -2.4115, -1.0431], [1.595, 1.1256, -6.0263, 1.6258, -1.4681, -2.4115, -1.0431], [1.595, 1.1256, -6.0264, 1.6258, -1.4681, -2.4115, -1.0432], [1.595, 1.1256, -6.0264, 1.6258, -1.4682, -2.4116, -1.0432], [1.595, 1.1256, -6.0265, 1.6258, -1.4682, -2.4116, -1.0432], [1.595, 1.1256, -6.0265, 1.6258, -1.4682, -2.4116, -1.0432], [1.595, 1.1256, -6.0265, 1.6258, -1.4682, -2.4116, -1.0432], [1.595, 1.1256, -6.0266, 1.6258, -1.4682, -2.4116, -1.0433], [1.595, 1.1256, -6.0266, 1.6258, -1.4682, -2.4117, -1.0433], [1.595, 1.1256, -6.0266, 1.6258, -1.4682, -2.4117, -1.0433]], "dt": 0.05, "ee_path": [[0.0, 0.1019, 0.1518], [-0.005, 0.1422, 0.1613], [-0.0232, 0.247, 0.1969], [-0.0612, 0.3876, 0.2744], [-0.1228, 0.5292, 0.4067], [-0.2028, 0.634, 0.5938], [-0.2863, 0.6704, 0.82], [-0.3521, 0.6218, 1.056], [-0.3804, 0.4923, 1.2666], [-0.3599, 0.304, 1.4204], [-0.2922, 0.0896, 1.497], [-0.1902, -0.1176, 1.4905], [-0.0742, -0.2919, 1.4084], [0.0347, -0.4186, 1.2678], [0.1192, -0.4946, 1.0905], [0.1686, -0.5251, 0.8977], [0.1763, -0.518, 0.7938], [0.1691, -0.5015, 0.7955], [0.1613, -0.4866, 0.7965], [0.1533, -0.4732, 0.7967], [0.1452, -0.4613, 0.7963], [0.1372, -0.4506, 0.7955], [0.1296, -0.4412, 0.7944], [0.1222, -0.4328, 0.793], [0.1153, -0.4254, 0.7914], [0.1088, -0.4188, 0.7898], [0.1028, -0.413, 0.7881], [0.0975, -0.4092, 0.7894], [0.0925, -0.4062, 0.7909], [0.0878, -0.4037, 0.7921], [0.0835, -0.4016, 0.7931], [0.0794, -0.3997, 0.794], [0.0756, -0.3982, 0.7947], [0.0721, -0.3969, 0.7952], [0.0689, -0.3958, 0.7957], [0.066, -0.3949, 0.7961], [0.0633, -0.3941, 0.7964], [0.0608, -0.3935, 0.7967], [0.0585, -0.3929, 0.7969], [0.0565, -0.3924, 0.7971], [0.0546, -0.392, 0.7972], [0.0529, -0.3917, 0.7973], [0.0514, -0.3914, 0.7974], [0.05, -0.3911, 0.7975], [0.0487, -0.3909, 0.7976], [0.0475, -0.3907, 0.7976], [0.0465, -0.3906, 0.7976], [0.0456, -0.3904, 0.7977], [0.0448, -0.3903, 0.7977], [0.044, -0.3902, 0.7977], [0.0434, -0.3901, 0.7977], [0.0428, -0.3901, 0.7978], [0.0423, -0.39, 0.7978], [0.0418, -0.3899, 0.7978], [0.0414, -0.3899, 0.7978], [0.041, -0.3898, 0.7978], [0.0407, -0.3898, 0.7978], [0.0404, -0.3898, 0.7978], [0.0401, -0.3897, 0.7978], [0.0399, -0.3897, 0.7978], [0.0397, -0.3897, 0.7978], [0.0395, -0.3897, 0.7978], [0.0394, -0.3896, 0.7978], [0.0393, -0.3896, 0.7978], [0.0392, -0.3896, 0.7978], [0.0391, -0.3896, 0.7978], [0.039, -0.3896, 0.7978], [0.0389, -0.3896, 0.7978], [0.0389, -0.3896, 0.7978], [0.0389, -0.3896, 0.7978], [0.0388, -0.3896, 0.7978], [0.0388, -0.3896, 0.7978], [0.0388, -0.3895, 0.7978], [0.0388, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0387, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978], [0.0386, -0.3895, 0.7978]], "landing_xy": [-0.3521, 0.6218], "success": false, "goal_samples": [[0.3737, -0.6116], [0.0963, 0.0359], [0.1074, 0.0273], [0.1641, 0.1064], [0.265, -0.1681], [0.3323, -0.1619], [-0.0153, -0.2843], [0.0065, 0.0909], [0.2625, -0.2495], [0.0608, -0.3571], [-0.0766, -0.5252], [0.2722, -0.2192], [0.3295, -0.324], [0.2511, -0.5151], [0.0427, -0.3296], [0.2549, -0.2434], [-0.0073, -0.007], [-0.3234, -0.136], [0.2276, -0.4403], [0.1406, -0.441], [-0.0424, -0.1801], [0.0852, -0.2565], [0.1689, 0.0745], [0.1978, -0.2807], [-0.0472, -0.3113], [0.1448, -0.4053], [0.1156, 0.0177], [0.1173, -0.0317], [0.2533, 0.0931], [-0.0584, -0.2309], [0.3996, -0.5014], [0.0719, -0.4255], [0.1388, -0.1523], [-0.3142, -0.1687], [0.26, -0.2268], [0.1059, 0.0388], [-0.068, -0.2295], [0.2108, -0.315], [0.0274, -0.4207], [0.0775, 0.0286], [0.0265, -0.1015], [0.4643, -0.1534], [-0.0853, -0.2991], [0.0058, 0.0726], [0.0544, 0.1199], [-0.3287, -0.5531], [0.1374, -0.0382], [-0.1905, -0.2753], [-0.0398, -0.2766], [0.2775, -0.3661]], "dispersion": 0.3333}};
