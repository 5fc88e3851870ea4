"""Frozen probit-scale grid for ADF p-values.

Knots sample the MacKinnon (1994/2010) response-surface p-value
approximation for the Dickey-Fuller t distribution (constant-only
regression, one estimated unit root) on a uniform statistic grid.
Values are stored as z = ndtri(p); consumers interpolate z linearly
and map back through the normal CDF.  Regenerate with
tools/gen_adf_table.py."""

import numpy as np

STAT_LO = -18.8
STAT_STEP = 0.01
# Statistics strictly above this value map to p = 1.0 exactly;
# statistics below STAT_LO map to p = 0.0.
STAT_HI = 2.74

Z_KNOTS = np.array([
    -11.402864640, -11.402837957, -11.402803620, -11.402761630, -11.402711986, -11.402654688, -11.402589736, -11.402517130,
    -11.402436870, -11.402348957, -11.402253390, -11.402150169, -11.402039294, -11.401920766, -11.401794584, -11.401660747,
    -11.401519258, -11.401370114, -11.401213316, -11.401048865, -11.400876760, -11.400697001, -11.400509588, -11.400314522,
    -11.400111802, -11.399901427, -11.399683400, -11.399457718, -11.399224382, -11.398983393, -11.398734750, -11.398478453,
    -11.398214502, -11.397942898, -11.397663640, -11.397376727, -11.397082162, -11.396779942, -11.396470068, -11.396152541,
    -11.395827360, -11.395494525, -11.395154036, -11.394805894, -11.394450098, -11.394086647, -11.393715544, -11.393336786,
    -11.392950374, -11.392556309, -11.392154590, -11.391745217, -11.391328190, -11.390903510, -11.390471176, -11.390031187,
    -11.389583546, -11.389128250, -11.388665300, -11.388194697, -11.387716440, -11.387230529, -11.386736964, -11.386235746,
    -11.385726874, -11.385210348, -11.384686168, -11.384154334, -11.383614846, -11.383067705, -11.382512910, -11.381950461,
    -11.381380358, -11.380802602, -11.380217192, -11.379624127, -11.379023410, -11.378415038, -11.377799012, -11.377175333,
    -11.376544000, -11.375905013, -11.375258372, -11.374604078, -11.373942130, -11.373272527, -11.372595272, -11.371910362,
    -11.371217798, -11.370517581, -11.369809710, -11.369094185, -11.368371006, -11.367640174, -11.366901688, -11.366155547,
    -11.365401754, -11.364640306, -11.363871204, -11.363094449, -11.362310040, -11.361517977, -11.360718260, -11.359910890,
    -11.359095866, -11.358273188, -11.357442856, -11.356604870, -11.355759230, -11.354905937, -11.354044990, -11.353176389,
    -11.352300134, -11.351416226, -11.350524664, -11.349625447, -11.348718578, -11.347804054, -11.346881876, -11.345952045,
    -11.345014560, -11.344069421, -11.343116628, -11.342156182, -11.341188082, -11.340212327, -11.339228920, -11.338237858,
    -11.337239142, -11.336232773, -11.335218750, -11.334197073, -11.333167742, -11.332130758, -11.331086120, -11.330033828,
    -11.328973882, -11.327906282, -11.326831028, -11.325748121, -11.324657560, -11.323559345, -11.322453476, -11.321339954,
    -11.320218778, -11.319089948, -11.317953464, -11.316809326, -11.315657534, -11.314498089, -11.313330990, -11.312156237,
    -11.310973830, -11.309783770, -11.308586056, -11.307380687, -11.306167666, -11.304946990, -11.303718660, -11.302482677,
    -11.301239040, -11.299987749, -11.298728804, -11.297462206, -11.296187954, -11.294906047, -11.293616488, -11.292319274,
    -11.291014406, -11.289701885, -11.288381710, -11.287053881, -11.285718398, -11.284375262, -11.283024472, -11.281666028,
    -11.280299930, -11.278926178, -11.277544772, -11.276155713, -11.274759000, -11.273354633, -11.271942612, -11.270522938,
    -11.269095610, -11.267660627, -11.266217992, -11.264767702, -11.263309758, -11.261844161, -11.260370910, -11.258890005,
    -11.257401446, -11.255905234, -11.254401368, -11.252889847, -11.251370674, -11.249843846, -11.248309364, -11.246767229,
    -11.245217440, -11.243659997, -11.242094900, -11.240522150, -11.238941746, -11.237353687, -11.235757976, -11.234154610,
    -11.232543590, -11.230924917, -11.229298590, -11.227664609, -11.226022974, -11.224373686, -11.222716744, -11.221052148,
    -11.219379898, -11.217699994, -11.216012436, -11.214317225, -11.212614360, -11.210903841, -11.209185668, -11.207459842,
    -11.205726362, -11.203985228, -11.202236440, -11.200479998, -11.198715902, -11.196944153, -11.195164750, -11.193377693,
    -11.191582982, -11.189780618, -11.187970600, -11.186152927, -11.184327602, -11.182494622, -11.180653988, -11.178805701,
    -11.176949760, -11.175086165, -11.173214916, -11.171336014, -11.169449458, -11.167555247, -11.165653384, -11.163743866,
    -11.161826694, -11.159901869, -11.157969390, -11.156029257, -11.154081470, -11.152126030, -11.150162936, -11.148192187,
    -11.146213786, -11.144227730, -11.142234020, -11.140232657, -11.138223640, -11.136206969, -11.134182644, -11.132150666,
    -11.130111034, -11.128063748, -11.126008808, -11.123946214, -11.121875966, -11.119798065, -11.117712510, -11.115619301,
    -11.113518438, -11.111409922, -11.109293752, -11.107169927, -11.105038450, -11.102899318, -11.100752532, -11.098598093,
    -11.096436000, -11.094266253, -11.092088852, -11.089903798, -11.087711090, -11.085510727, -11.083302712, -11.081087042,
    -11.078863718, -11.076632741, -11.074394110, -11.072147825, -11.069893886, -11.067632294, -11.065363048, -11.063086148,
    -11.060801594, -11.058509386, -11.056209524, -11.053902009, -11.051586840, -11.049264017, -11.046933540, -11.044595410,
    -11.042249626, -11.039896188, -11.037535096, -11.035166350, -11.032789950, -11.030405897, -11.028014190, -11.025614829,
    -11.023207814, -11.020793146, -11.018370824, -11.015940847, -11.013503218, -11.011057934, -11.008604996, -11.006144405,
    -11.003676160, -11.001200261, -10.998716708, -10.996225502, -10.993726642, -10.991220128, -10.988705960, -10.986184138,
    -10.983654662, -10.981117533, -10.978572750, -10.976020313, -10.973460222, -10.970892478, -10.968317080, -10.965734027,
    -10.963143322, -10.960544962, -10.957938948, -10.955325281, -10.952703960, -10.950074985, -10.947438356, -10.944794074,
    -10.942142138, -10.939482548, -10.936815304, -10.934140406, -10.931457854, -10.928767649, -10.926069790, -10.923364277,
    -10.920651110, -10.917930290, -10.915201816, -10.912465688, -10.909721906, -10.906970470, -10.904211380, -10.901444637,
    -10.898670240, -10.895888189, -10.893098484, -10.890301126, -10.887496114, -10.884683447, -10.881863128, -10.879035154,
    -10.876199526, -10.873356245, -10.870505310, -10.867646721, -10.864780478, -10.861906582, -10.859025032, -10.856135828,
    -10.853238970, -10.850334458, -10.847422292, -10.844502473, -10.841575000, -10.838639873, -10.835697092, -10.832746658,
    -10.829788570, -10.826822827, -10.823849432, -10.820868382, -10.817879678, -10.814883321, -10.811879310, -10.808867645,
    -10.805848326, -10.802821354, -10.799786728, -10.796744448, -10.793694514, -10.790636926, -10.787571684, -10.784498789,
    -10.781418240, -10.778330037, -10.775234180, -10.772130670, -10.769019506, -10.765900688, -10.762774216, -10.759640090,
    -10.756498310, -10.753348877, -10.750191790, -10.747027049, -10.743854654, -10.740674606, -10.737486904, -10.734291547,
    -10.731088538, -10.727877874, -10.724659556, -10.721433585, -10.718199960, -10.714958681, -10.711709748, -10.708453162,
    -10.705188922, -10.701917027, -10.698637480, -10.695350278, -10.692055422, -10.688752913, -10.685442750, -10.682124933,
    -10.678799462, -10.675466338, -10.672125560, -10.668777128, -10.665421042, -10.662057302, -10.658685908, -10.655306861,
    -10.651920160, -10.648525805, -10.645123796, -10.641714134, -10.638296818, -10.634871847, -10.631439224, -10.627998946,
    -10.624551014, -10.621095429, -10.617632190, -10.614161297, -10.610682750, -10.607196550, -10.603702696, -10.600201187,
    -10.596692026, -10.593175210, -10.589650740, -10.586118617, -10.582578840, -10.579031409, -10.575476324, -10.571913586,
    -10.568343194, -10.564765148, -10.561179448, -10.557586094, -10.553985086, -10.550376425, -10.546760110, -10.543136141,
    -10.539504518, -10.535865242, -10.532218312, -10.528563728, -10.524901490, -10.521231598, -10.517554052, -10.513868853,
    -10.510176000, -10.506475493, -10.502767332, -10.499051518, -10.495328050, -10.491596927, -10.487858152, -10.484111722,
    -10.480357638, -10.476595901, -10.472826510, -10.469049465, -10.465264766, -10.461472414, -10.457672408, -10.453864748,
    -10.450049434, -10.446226466, -10.442395844, -10.438557569, -10.434711640, -10.430858057, -10.426996820, -10.423127930,
    -10.419251386, -10.415367188, -10.411475336, -10.407575830, -10.403668670, -10.399753857, -10.395831390, -10.391901269,
    -10.387963494, -10.384018066, -10.380064984, -10.376104248, -10.372135858, -10.368159814, -10.364176116, -10.360184765,
    -10.356185760, -10.352179101, -10.348164788, -10.344142822, -10.340113202, -10.336075928, -10.332031000, -10.327978418,
    -10.323918182, -10.319850293, -10.315774750, -10.311691553, -10.307600702, -10.303502198, -10.299396040, -10.295282227,
    -10.291160762, -10.287031642, -10.282894868, -10.278750441, -10.274598360, -10.270438625, -10.266271236, -10.262096194,
    -10.257913498, -10.253723148, -10.249525144, -10.245319486, -10.241106174, -10.236885209, -10.232656590, -10.228420317,
    -10.224176390, -10.219924810, -10.215665576, -10.211398687, -10.207124146, -10.202841950, -10.198552100, -10.194254597,
    -10.189949440, -10.185636629, -10.181316164, -10.176988046, -10.172652274, -10.168308848, -10.163957768, -10.159599034,
    -10.155232646, -10.150858605, -10.146476910, -10.142087561, -10.137690558, -10.133285902, -10.128873592, -10.124453628,
    -10.120026010, -10.115590738, -10.111147812, -10.106697233, -10.102239000, -10.097773113, -10.093299572, -10.088818378,
    -10.084329530, -10.079833027, -10.075328872, -10.070817062, -10.066297598, -10.061770481, -10.057235710, -10.052693285,
    -10.048143206, -10.043585474, -10.039020088, -10.034447047, -10.029866354, -10.025278006, -10.020682004, -10.016078349,
    -10.011467040, -10.006848077, -10.002221460, -9.997587190, -9.992945266, -9.988295687, -9.983638456, -9.978973570,
    -9.974301030, -9.969620837, -9.964932990, -9.960237489, -9.955534334, -9.950823526, -9.946105064, -9.941378947,
    -9.936645178, -9.931903754, -9.927154676, -9.922397945, -9.917633560, -9.912861521, -9.908081828, -9.903294482,
    -9.898499482, -9.893696828, -9.888886520, -9.884068558, -9.879242942, -9.874409673, -9.869568750, -9.864720173,
    -9.859863942, -9.855000058, -9.850128520, -9.845249327, -9.840362482, -9.835467982, -9.830565828, -9.825656021,
    -9.820738560, -9.815813445, -9.810880676, -9.805940254, -9.800992178, -9.796036448, -9.791073064, -9.786102026,
    -9.781123334, -9.776136989, -9.771142990, -9.766141337, -9.761132030, -9.756115070, -9.751090456, -9.746058187,
    -9.741018266, -9.735970690, -9.730915460, -9.725852577, -9.720782040, -9.715703849, -9.710618004, -9.705524506,
    -9.700423354, -9.695314547, -9.690198088, -9.685073974, -9.679942206, -9.674802785, -9.669655710, -9.664500981,
    -9.659338598, -9.654168562, -9.648990872, -9.643805527, -9.638612530, -9.633411878, -9.628203572, -9.622987613,
    -9.617764000, -9.612532733, -9.607293812, -9.602047238, -9.596793010, -9.591531128, -9.586261592, -9.580984402,
    -9.575699558, -9.570407061, -9.565106910, -9.559799105, -9.554483646, -9.549160534, -9.543829768, -9.538491348,
    -9.533145274, -9.527791546, -9.522430164, -9.517061129, -9.511684440, -9.506300097, -9.500908100, -9.495508450,
    -9.490101146, -9.484686187, -9.479263576, -9.473833310, -9.468395390, -9.462949817, -9.457496590, -9.452035709,
    -9.446567174, -9.441090986, -9.435607144, -9.430115648, -9.424616498, -9.419109694, -9.413595236, -9.408073125,
    -9.402543360, -9.397005941, -9.391460868, -9.385908142, -9.380347762, -9.374779727, -9.369204040, -9.363620698,
    -9.358029702, -9.352431053, -9.346824750, -9.341210793, -9.335589182, -9.329959918, -9.324323000, -9.318678427,
    -9.313026202, -9.307366322, -9.301698788, -9.296023601, -9.290340760, -9.284650265, -9.278952116, -9.273246314,
    -9.267532858, -9.261811748, -9.256082984, -9.250346566, -9.244602494, -9.238850769, -9.233091390, -9.227324357,
    -9.221549670, -9.215767330, -9.209977336, -9.204179688, -9.198374386, -9.192561430, -9.186740820, -9.180912557,
    -9.175076640, -9.169233069, -9.163381844, -9.157522966, -9.151656434, -9.145782247, -9.139900408, -9.134010914,
    -9.128113766, -9.122208965, -9.116296510, -9.110376401, -9.104448638, -9.098513222, -9.092570152, -9.086619428,
    -9.080661050, -9.074695018, -9.068721332, -9.062739993, -9.056751000, -9.050754353, -9.044750052, -9.038738098,
    -9.032718490, -9.026691228, -9.020656312, -9.014613742, -9.008563518, -9.002505641, -8.996440110, -8.990366925,
    -8.984286086, -8.978197594, -8.972101448, -8.965997648, -8.959886194, -8.953767086, -8.947640324, -8.941505909,
    -8.935363840, -8.929214117, -8.923056740, -8.916891710, -8.910719026, -8.904538687, -8.898350696, -8.892155050,
    -8.885951750, -8.879740797, -8.873522190, -8.867295929, -8.861062014, -8.854820446, -8.848571224, -8.842314348,
    -8.836049818, -8.829777634, -8.823497796, -8.817210305, -8.810915160, -8.804612361, -8.798301908, -8.791983802,
    -8.785658042, -8.779324628, -8.772983560, -8.766634838, -8.760278462, -8.753914433, -8.747542750, -8.741163413,
    -8.734776422, -8.728381778, -8.721979480, -8.715569527, -8.709151922, -8.702726662, -8.696293748, -8.689853181,
    -8.683404960, -8.676949085, -8.670485556, -8.664014374, -8.657535538, -8.651049048, -8.644554904, -8.638053106,
    -8.631543654, -8.625026549, -8.618501790, -8.611969377, -8.605429310, -8.598881590, -8.592326216, -8.585763187,
    -8.579192506, -8.572614170, -8.566028180, -8.559434537, -8.552833240, -8.546224289, -8.539607684, -8.532983426,
    -8.526351514, -8.519711948, -8.513064728, -8.506409854, -8.499747326, -8.493077145, -8.486399310, -8.479713821,
    -8.473020678, -8.466319882, -8.459611432, -8.452895328, -8.446171570, -8.439440158, -8.432701092, -8.425954373,
    -8.419200000, -8.412437973, -8.405668292, -8.398890958, -8.392105970, -8.385313328, -8.378513032, -8.371705082,
    -8.364889478, -8.358066221, -8.351235310, -8.344396745, -8.337550526, -8.330696654, -8.323835128, -8.316965947,
    -8.310089114, -8.303204626, -8.296312484, -8.289412689, -8.282505240, -8.275590137, -8.268667380, -8.261736970,
    -8.254798906, -8.247853187, -8.240899816, -8.233938790, -8.226970110, -8.219993777, -8.213009790, -8.206018149,
    -8.199018854, -8.192011906, -8.184997304, -8.177975048, -8.170945138, -8.163907574, -8.156862356, -8.149809485,
    -8.142748960, -8.135680781, -8.128604948, -8.121521462, -8.114430322, -8.107331528, -8.100225080, -8.093110978,
    -8.085989222, -8.078859813, -8.071722750, -8.064578033, -8.057425662, -8.050265638, -8.043097960, -8.035922627,
    -8.028739642, -8.021549002, -8.014350708, -8.007144761, -7.999931160, -7.992709905, -7.985480996, -7.978244434,
    -7.971000218, -7.963748347, -7.956488824, -7.949221646, -7.941946814, -7.934664329, -7.927374190, -7.920076397,
    -7.912770950, -7.905457850, -7.898137096, -7.890808688, -7.883472626, -7.876128910, -7.868777540, -7.861418517,
    -7.854051840, -7.846677509, -7.839295524, -7.831905886, -7.824508594, -7.817103648, -7.809691048, -7.802270794,
    -7.794842886, -7.787407325, -7.779964110, -7.772513241, -7.765054718, -7.757588542, -7.750114712, -7.742633228,
    -7.735144090, -7.727647298, -7.720142852, -7.712630753, -7.705111000, -7.697583593, -7.690048532, -7.682505818,
    -7.674955450, -7.667397427, -7.659831752, -7.652258422, -7.644677438, -7.637088801, -7.629492510, -7.621888565,
    -7.614276966, -7.606657714, -7.599030808, -7.591396248, -7.583754034, -7.576104166, -7.568446644, -7.560781469,
    -7.553108640, -7.545428157, -7.537740020, -7.530044230, -7.522340786, -7.514629687, -7.506910936, -7.499184530,
    -7.491450470, -7.483708757, -7.475959390, -7.468202369, -7.460437694, -7.452665366, -7.444885384, -7.437097748,
    -7.429302458, -7.421499514, -7.413688916, -7.405870665, -7.398044760, -7.390211201, -7.382369988, -7.374521122,
    -7.366664602, -7.358800428, -7.350928600, -7.343049118, -7.335161982, -7.327267193, -7.319364750, -7.311454653,
    -7.303536902, -7.295611498, -7.287678440, -7.279737728, -7.271789362, -7.263833342, -7.255869668, -7.247898341,
    -7.239919360, -7.231932725, -7.223938436, -7.215936494, -7.207926898, -7.199909647, -7.191884744, -7.183852186,
    -7.175811974, -7.167764109, -7.159708590, -7.151645417, -7.143574590, -7.135496110, -7.127409976, -7.119316187,
    -7.111214746, -7.103105650, -7.094988900, -7.086864497, -7.078732440, -7.070592729, -7.062445364, -7.054290346,
    -7.046127674, -7.037957347, -7.029779368, -7.021593734, -7.013400446, -7.005199505, -6.996990910, -6.988774661,
    -6.980550758, -6.972319202, -6.964079992, -6.955833127, -6.947578610, -6.939316438, -6.931046612, -6.922769133,
    -6.914484000, -6.906191213, -6.897890772, -6.889582678, -6.881266930, -6.872943528, -6.864612472, -6.856273762,
    -6.847927398, -6.839573381, -6.831211710, -6.822842385, -6.814465406, -6.806080774, -6.797688488, -6.789288547,
    -6.780880954, -6.772465706, -6.764042804, -6.755612249, -6.747174040, -6.738728177, -6.730274660, -6.721813490,
    -6.713344666, -6.704868187, -6.696384056, -6.687892270, -6.679392830, -6.670885737, -6.662370990, -6.653848589,
    -6.645318534, -6.636780826, -6.628235464, -6.619682447, -6.611121778, -6.602553454, -6.593977476, -6.585393845,
    -6.576802560, -6.568203621, -6.559597028, -6.550982782, -6.542360882, -6.533731327, -6.525094120, -6.516449258,
    -6.507796742, -6.499136573, -6.490468750, -6.481793273, -6.473110142, -6.464419358, -6.455720920, -6.447014828,
    -6.438301082, -6.429579682, -6.420850628, -6.412113921, -6.403369560, -6.394617545, -6.385857876, -6.377090554,
    -6.368315578, -6.359532948, -6.350742664, -6.341944726, -6.333139134, -6.324325889, -6.315504990, -6.306676437,
    -6.297840230, -6.288996370, -6.280144856, -6.271285687, -6.262418866, -6.253544390, -6.244662260, -6.235772477,
    -6.226875040, -6.217969949, -6.209057204, -6.200136806, -6.191208754, -6.182273047, -6.173329688, -6.164378674,
    -6.155420006, -6.146453685, -6.137479710, -6.128498081, -6.119508798, -6.110511862, -6.101507272, -6.092495028,
    -6.083475130, -6.074447578, -6.065412372, -6.056369513, -6.047319000, -6.038260833, -6.029195012, -6.020121538,
    -6.011040410, -6.001951628, -5.992855192, -5.983751102, -5.974639358, -5.965519961, -5.956392910, -5.947258205,
    -5.938115846, -5.928965834, -5.919808168, -5.910642847, -5.901469874, -5.892289246, -5.883100964, -5.873905029,
    -5.864701440, -5.855490197, -5.846271300, -5.837044750, -5.827810546, -5.818568688, -5.809319176, -5.800062010,
    -5.790797190, -5.781524717, -5.772244590, -5.762956809, -5.753661374, -5.744358286, -5.735047544, -5.725729148,
    -5.716403098, -5.707069394, -5.697728036, -5.688379025, -5.679022360, -5.669658041, -5.660286068, -5.650906442,
    -5.641519162, -5.632124228, -5.622721640, -5.613311398, -5.603893502, -5.594467953, -5.585034750, -5.575593893,
    -5.566145382, -5.556689218, -5.547225400, -5.537753928, -5.528274802, -5.518788022, -5.509293588, -5.499791501,
    -5.490281760, -5.480764365, -5.471239316, -5.461706614, -5.452166258, -5.442618247, -5.433062584, -5.423499266,
    -5.413928294, -5.404349669, -5.394763390, -5.385169457, -5.375567870, -5.365958630, -5.356341736, -5.346717187,
    -5.337084986, -5.327445130, -5.317797620, -5.308142457, -5.298479640, -5.288809169, -5.279131044, -5.269445266,
    -5.259751834, -5.250050748, -5.240342008, -5.230625614, -5.220901566, -5.211169865, -5.201430510, -5.191683501,
    -5.181928838, -5.172166522, -5.162396552, -5.152618928, -5.142833650, -5.133040718, -5.123240132, -5.113431893,
    -5.103616000, -5.093792453, -5.083961252, -5.074122398, -5.064275890, -5.054421728, -5.044559912, -5.034690442,
    -5.024813318, -5.014928541, -5.005036110, -4.995136025, -4.985228286, -4.975312894, -4.965389848, -4.955459147,
    -4.945520794, -4.935574786, -4.925621124, -4.915659809, -4.905690840, -4.895714217, -4.885729940, -4.875738010,
    -4.865738426, -4.855731188, -4.845716296, -4.835693750, -4.825663550, -4.815625697, -4.805580190, -4.795527029,
    -4.785466214, -4.775397746, -4.765321624, -4.755237848, -4.745146418, -4.735047334, -4.724940596, -4.714826205,
    -4.704704160, -4.694574461, -4.684437108, -4.674292102, -4.664139442, -4.653979127, -4.643811160, -4.633635538,
    -4.623452262, -4.613261333, -4.603062750, -4.592856513, -4.582642622, -4.572421078, -4.562191880, -4.551955028,
    -4.541710522, -4.531458362, -4.521198548, -4.510931081, -4.500655960, -4.490373185, -4.480082756, -4.469784674,
    -4.459478938, -4.449165547, -4.438844504, -4.428515806, -4.418179454, -4.407835449, -4.397483790, -4.387124477,
    -4.376757510, -4.366382890, -4.356000616, -4.345610688, -4.335213106, -4.324807870, -4.314394980, -4.303974437,
    -4.293546240, -4.283110389, -4.272666884, -4.262215726, -4.251756914, -4.241290448, -4.230816328, -4.220334554,
    -4.209845126, -4.199348045, -4.188843310, -4.178330921, -4.167810878, -4.157283182, -4.146747832, -4.136204827,
    -4.125654170, -4.115095858, -4.104529892, -4.093956273, -4.083375000, -4.072786073, -4.062189492, -4.051585258,
    -4.040973370, -4.030353828, -4.019726632, -4.009091782, -3.998449278, -3.987799121, -3.977141310, -3.966475845,
    -3.955802726, -3.945121954, -3.934433528, -3.923737448, -3.913033714, -3.902322326, -3.891603284, -3.880876589,
    -3.870142240, -3.859400237, -3.848650580, -3.837893270, -3.827128306, -3.816355688, -3.805575416, -3.794787490,
    -3.783991910, -3.773188677, -3.762377790, -3.751559249, -3.740733054, -3.729899206, -3.719057704, -3.708208548,
    -3.697351738, -3.686487274, -3.675615156, -3.664735385, -3.653847960, -3.642952881, -3.632050148, -3.621139762,
    -3.610221722, -3.599296028, -3.588362680, -3.577421678, -3.566473022, -3.555516713, -3.544552750, -3.533581133,
    -3.522601862, -3.511614938, -3.500620360, -3.489618128, -3.478608242, -3.467590702, -3.456565508, -3.445532661,
    -3.434492160, -3.423444005, -3.412388196, -3.401324734, -3.390253618, -3.379174847, -3.368088424, -3.356994346,
    -3.345892614, -3.334783229, -3.323666190, -3.312541497, -3.301409150, -3.290269150, -3.279121496, -3.267966187,
    -3.256803226, -3.245632610, -3.234454340, -3.223268417, -3.212074840, -3.200873609, -3.189664724, -3.178448186,
    -3.167223994, -3.155992148, -3.144752648, -3.133505494, -3.122250686, -3.110988225, -3.099718110, -3.088440341,
    -3.077154918, -3.065861842, -3.054561112, -3.043252728, -3.031936690, -3.020612998, -3.009281652, -2.997942653,
    -2.986596000, -2.975241693, -2.963879732, -2.952510118, -2.941132850, -2.929747928, -2.918355352, -2.906955122,
    -2.895547238, -2.884131701, -2.872708510, -2.861277665, -2.849839166, -2.838393014, -2.826939208, -2.815477747,
    -2.804008634, -2.792531866, -2.781047444, -2.769555369, -2.758055640, -2.746548257, -2.735033220, -2.723510530,
    -2.711980186, -2.700442187, -2.688896536, -2.677343230, -2.665782270, -2.654213657, -2.642637390, -2.631053469,
    -2.619461894, -2.607862666, -2.596255784, -2.584641248, -2.573019058, -2.561389214, -2.549751716, -2.538106565,
    -2.526453760, -2.514793301, -2.503125188, -2.491449422, -2.479766002, -2.468074928, -2.456376200, -2.444669818,
    -2.432955782, -2.421234093, -2.409504750, -2.397767753, -2.386023102, -2.374270798, -2.362510840, -2.350743228,
    -2.338967962, -2.327185042, -2.315394468, -2.303596241, -2.291790360, -2.279976825, -2.268155636, -2.256326794,
    -2.244490298, -2.232646147, -2.220794344, -2.208934886, -2.197067774, -2.185193009, -2.173310590, -2.161420517,
    -2.149522790, -2.137617410, -2.125704376, -2.113783688, -2.101855346, -2.089919350, -2.077975700, -2.066024397,
    -2.054065440, -2.042098829, -2.030124564, -2.018142646, -2.006153074, -1.994155848, -1.982150968, -1.970138434,
    -1.958118246, -1.946090405, -1.934054910, -1.922011761, -1.909960958, -1.897902502, -1.885836392, -1.873762628,
    -1.861681210, -1.849592138, -1.837495412, -1.825391033, -1.813279000, -1.801159313, -1.789031972, -1.776896978,
    -1.764754330, -1.752604028, -1.740446072, -1.728280462, -1.716107198, -1.703926281, -1.691737710, -1.679541485,
    -1.667337606, -1.655126074, -1.642906888, -1.630680047, -1.618445554, -1.606203406, -1.593953604, -1.581696149,
    -1.569431040, -1.557158277, -1.544877860, -1.532589790, -1.520294066, -1.507990688, -1.495679656, -1.483360970,
    -1.471034630, -1.458700637, -1.446358990, -1.434009689, -1.421652734, -1.409288126, -1.396915864, -1.384535948,
    -1.372148378, -1.359753154, -1.347350276, -1.334939745, -1.322521560, -1.310095721, -1.297662228, -1.285221082,
    -1.272772282, -1.260315828, -1.247851720, -1.235379958, -1.222900542, -1.210413473, -1.197918750, -1.185416373,
    -1.172906342, -1.160388658, -1.147863320, -1.135330327, -1.122789682, -1.110241382, -1.097685428, -1.085121821,
    -1.072550560, -1.059971645, -1.047385076, -1.034790854, -1.022188978, -1.009579448, -0.996962264, -0.984337426,
    -0.971704934, -0.959064789, -0.946416990, -0.933761537, -0.921098430, -0.908427670, -0.895749256, -0.883063187,
    -0.870369466, -0.857668090, -0.844959060, -0.832242377, -0.819518040, -0.806786049, -0.794046404, -0.781299106,
    -0.768544154, -0.755781548, -0.743011288, -0.730233374, -0.717447806, -0.704654585, -0.691853710, -0.679045181,
    -0.666228998, -0.653405162, -0.640573672, -0.627734528, -0.614887730, -0.602033278, -0.589171172, -0.576301413,
    -0.563424000, -0.550538933, -0.537646212, -0.524745838, -0.511837810, -0.498922127, -0.485998792, -0.473067802,
    -0.460129158, -0.447182861, -0.434228910, -0.421267305, -0.408298046, -0.395321134, -0.382336568, -0.369344348,
    -0.356344474, -0.343336946, -0.330321764, -0.317298929, -0.304268440, -0.291230297, -0.278184500, -0.265131050,
    -0.252069946, -0.239001188, -0.225924776, -0.212840710, -0.199748990, -0.186649617, -0.173542590, -0.160427909,
    -0.147305574, -0.134175586, -0.121037944, -0.107892647, -0.094739698, -0.081579094, -0.068410836, -0.053746768,
    -0.041136672, -0.028542113, -0.015963153, -0.003399854, 0.009147721, 0.021679511, 0.034195453, 0.046695485,
    0.059179545, 0.071647571, 0.084099500, 0.096535270, 0.108954819, 0.121358085, 0.133745006, 0.146115519,
    0.158469562, 0.170807073, 0.183127990, 0.195432250, 0.207719792, 0.219990553, 0.232244470, 0.244481483,
    0.256701528, 0.268904543, 0.281090466, 0.293259235, 0.305410788, 0.317545062, 0.329661996, 0.341761527,
    0.353843592, 0.365908130, 0.377955078, 0.389984375, 0.401995958, 0.413989764, 0.425965732, 0.437923799,
    0.449863904, 0.461785984, 0.473689976, 0.485575819, 0.497443450, 0.509292807, 0.521123828, 0.532936451,
    0.544730614, 0.556506253, 0.568263308, 0.580001716, 0.591721414, 0.603422341, 0.615104434, 0.626767631,
    0.638411870, 0.650037089, 0.661643225, 0.673230216, 0.684798000, 0.696346515, 0.707875699, 0.719385489,
    0.730875823, 0.742346639, 0.753797875, 0.765229468, 0.776641357, 0.788033479, 0.799405772, 0.810758174,
    0.822090622, 0.833403054, 0.844695409, 0.855967623, 0.867219635, 0.878451383, 0.889662803, 0.900853835,
    0.912024416, 0.923174483, 0.934303975, 0.945412829, 0.956500983, 0.967568375, 0.978614942, 0.989640623,
    1.000645355, 1.011629076, 1.022591724, 1.033533236, 1.044453551, 1.055352606, 1.066230339, 1.077086687,
    1.087921589, 1.098734982, 1.109526805, 1.120296994, 1.131045488, 1.141772224, 1.152477141, 1.163160176,
    1.173821267, 1.184460351, 1.195077367, 1.205672252, 1.216244944, 1.226795381, 1.237323500, 1.247829240,
    1.258312538, 1.268773332, 1.279211560, 1.289627159, 1.300020068, 1.310390224, 1.320737564, 1.331062028,
    1.341363552, 1.351642074, 1.361897533, 1.372129865, 1.382339009, 1.392524903, 1.402687484, 1.412826690,
    1.422942459, 1.433034728, 1.443103436, 1.453148520, 1.463169918, 1.473167568, 1.483141408, 1.493091375,
    1.503017407, 1.512919442, 1.522797418, 1.532651273, 1.542480944, 1.552286369, 1.562067486, 1.571824233,
    1.581556547, 1.591264367, 1.600947630, 1.610606273, 1.620240236, 1.629849455, 1.639433868, 1.648993413,
    1.658528028, 1.668037651, 1.677522219, 1.686981671, 1.696415944, 1.705824975, 1.715208703, 1.724567065,
    1.733900000, 1.743207445, 1.752489337, 1.761745615, 1.770976216, 1.780181079, 1.789360141, 1.798513339,
    1.807640612, 1.816741897, 1.825817132, 1.834866255, 1.843889204, 1.852885917, 1.861856330, 1.870800383,
    1.879718013, 1.888609157, 1.897473754, 1.906311741, 1.915123056, 1.923907637, 1.932665422, 1.941396348,
    1.950100353, 1.958777375, 1.967427352, 1.976050222, 1.984645922, 1.993214390, 2.001755564, 2.010269382,
    2.018755781, 2.027214700, 2.035646076, 2.044049847, 2.052425951, 2.060774325, 2.069094907, 2.077387636,
    2.085652448, 2.093889282, 2.102098076, 2.110278766, 2.118431292, 2.126555591, 2.134651600, 2.142719258,
    2.150758502, 2.158769270, 2.166751500, 2.174705129, 2.182630096, 2.190526338, 2.198393793, 2.206232399,
    2.214042093, 2.221822814, 2.229574499, 2.237297086, 2.244990512, 2.252654716, 2.260289635, 2.267895208,
    2.275471371, 2.283018063, 2.290535221, 2.298022784, 2.305480689, 2.312908874, 2.320307276, 2.327675834,
    2.335014485, 2.342323167, 2.349601818, 2.356850375, 2.364068777, 2.371256961, 2.378414865, 2.385542427,
    2.392639584, 2.399706275, 2.406742437, 2.413748007, 2.420722925, 2.427667127, 2.434580551, 2.441463136,
    2.448314818, 2.455135536, 2.461925228, 2.468683831, 2.475411283, 2.482107522, 2.488772485, 2.495406111,
    2.502008337, 2.508579101, 2.515118341, 2.521625995, 2.528102000, 2.534546294, 2.540958815, 2.547339501,
    2.553688290, 2.560005119, 2.566289926, 2.572542649, 2.578763226, 2.584951594, 2.591107692, 2.597231457,
    2.603322826, 2.609381739, 2.615408132, 2.621401943, 2.627363110, 2.633291571, 2.639187264, 2.645050126,
    2.650880096, 2.656677111, 2.662441108, 2.668172026, 2.673869802, 2.679534375, 2.685165682, 2.690763660,
    2.696328248, 2.701859383, 2.707357004, 2.712821048, 2.718251452, 2.723648155, 2.729011094, 2.734340207,
    2.739635432, 2.744896707, 2.750123970, 2.755317157, 2.760476208, 2.765601060, 2.770691650, 2.775747917,
    2.780769798, 2.785757231, 2.790710154, 2.795628505, 2.800512221, 2.805361240, 2.810175500, 2.814954939,
    2.819699495, 2.824409105, 2.829083707, 2.833723239, 2.838327639, 2.842896844, 2.847430793, 2.851929423,
    2.856392672, 2.860820478, 2.865212778, 2.869569510, 2.873890613, 2.878176023, 2.882425679, 2.886639519,
    2.890817479, 2.894959499, 2.899065516, 2.903135467, 2.907169291, 2.911166925, 2.915128307, 2.919053375,
    2.922942066, 2.926794319, 2.930610071, 2.934389260, 2.938131824, 2.941837700, 2.945506827, 2.949139142,
    2.952734583, 2.956293087, 2.959814593, 2.963299038, 2.966746361, 2.970156498, 2.973529388, 2.976864968,
    2.980163177, 2.983423952, 2.986647231, 2.989832951, 2.992981051, 2.996091468, 2.999164140, 3.002199005,
    3.005196000, 3.008155064, 3.011076134, 3.013959148, 3.016804044, 3.019610759, 3.022379232, 3.025109400,
    3.027801200, 3.030454572, 3.033069452, 3.035645778, 3.038183489, 3.040682521, 3.043142813, 3.045564303,
    3.047946928, 3.050290626, 3.052595335, 3.054860992, 3.057087536, 3.059274904, 3.061423034, 3.063531864,
    3.065601332, 3.067631375, 3.069621931, 3.071572938, 3.073484334, 3.075356057, 3.077188044, 3.078980233,
    3.080732562, 3.082444969, 3.084117391, 3.085749767, 3.087342034, 3.088894129, 3.090405992, 3.091877559,
    3.093308768, 3.094699557, 3.096049864, 3.097359627, 3.098628783, 3.099857271, 3.101045028, 3.102191991,
    3.103298099, 3.104363289, 3.105387500, 3.106370669, 3.107312733, 3.108213631, 3.109073300, 3.109891679,
    3.110668705, 3.111404315, 3.112098448, 3.112751041, 3.113362032, 3.113931359, 3.114458960, 3.114944773,
    3.115388734, 3.115790783, 3.116150857, 3.116468893, 3.116744830, 3.116978605, 3.117170156, 3.117319421,
    3.117426338, 3.117490844, 3.117512877,
])
