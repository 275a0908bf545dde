// @generated by tests/oracle/golden.py; do not edit by hand.
#![allow(dead_code, clippy::approx_constant)]

/// Gamma(7.5) by the product recursion from Gamma(0.5).
pub const GAMMA_7_5: f64 = 1871.2543057977884;
/// I_0(2).
pub const BESSEL_I0_2: f64 = 2.2795853023360673;
/// I_0(10) / I_2(10).
pub const RATIO_I0_I2_AT_10: f64 = 1.2341412314764524;
/// Tricomi uniform I^T_1 at s = i.
pub const TRICOMI_1_AT_I: (f64, f64) = (0.9947930229361946, 0.12489150435806191);
/// (f_0(1), g_0(1)).
pub const FG_0_AT_1: (f64, f64) = (0.9843817812130868, 0.24956604003665972);
/// (ber_0(1), bei_0(1)).
pub const KELVIN_0_AT_1: (f64, f64) = (0.9843817812130868, 0.24956604003665972);
/// (f_0.5(16), g_0.5(16)).
pub const FG_HALF_AT_16: (f64, f64) = (-1.078071389488114, 2.1213895976580437);
/// First positive zero of J_0 by bisection on its series.
pub const J0_FIRST_ZERO: f64 = 2.404825557695773;
/// Laplace-domain creep rate at nu = 0, s = 1.
pub const CREEP_RATE_LAPLACE_NU0_S1: f64 = 8.326612235221068;
/// s J(s) at nu = 1, s = 4.
pub const CREEP_COMPLIANCE_LAPLACE_NU1_S4: f64 = 7.4769068318000995;
/// Dirichlet-series creep rate at nu = 0, t = 1 (200 zeros).
pub const CREEP_RATE_TIME_NU0_T1: f64 = 8.000000000014051;
/// Creep rate at nu = 0, t = 1 minus its constant term 8.
pub const CREEP_RATE_TIME_NU0_T1_EXCESS: f64 = 1.4051077031458285e-11;
/// Q^-1 at nu = 0, omega = 1 (f/g series form).
pub const Q_INVERSE_NU0_W1: f64 = 6.006243342891924;

/// (nu, omega, Q^-1) from the f/g series form at working precision sized to the cancellation.
pub const Q_INVERSE_TABLE: &[(f64, f64, f64)] = &[
    (-0.5, 1e-05, 250000.00000005288),
    (-0.5, 0.001, 2500.0000052910054),
    (-0.5, 0.1, 25.000529090231964),
    (-0.5, 1.0, 2.5052807307406555),
    (-0.5, 10.0, 0.2944797073200327),
    (-0.5, 100.0, 0.07609103295146698),
    (-0.5, 1000.0, 0.022872115832914354),
    (-0.5, 10000.0, 0.007121423883059628),
    (-0.5, 100000.0, 0.002241079182895704),
    (-0.5, 1000000.0, 0.000707607134990115),
    (0.0, 1e-05, 600000.0000000624),
    (0.0, 0.001, 6000.00000625),
    (0.0, 0.1, 60.000624993334654),
    (0.0, 1.0, 6.006243342891924),
    (0.0, 10.0, 0.6565735251792298),
    (0.0, 100.0, 0.1529030428287225),
    (0.0, 1000.0, 0.04576261289746837),
    (0.0, 10000.0, 0.014243393431029802),
    (0.0, 100000.0, 0.004482175287345515),
    (0.0, 1000000.0, 0.001415214801813604),
    (1.0, 1e-05, 1600000.0000000554),
    (1.0, 0.001, 16000.000005555556),
    (1.0, 0.1, 160.00055555324764),
    (1.0, 1.0, 16.0055532488016),
    (1.0, 10.0, 1.6533590251667876),
    (1.0, 100.0, 0.31165381017302224),
    (1.0, 1000.0, 0.091672427419015),
    (1.0, 10000.0, 0.028491152602596447),
    (1.0, 100000.0, 0.008964485948404481),
    (1.0, 1000000.0, 0.002830433858298199),
    (3.5, 1e-05, 5850000.000000032),
    (3.5, 0.001, 58500.00000320855),
    (3.5, 0.1, 585.0003208553522),
    (3.5, 1.0, 58.50320829353104),
    (3.5, 10.0, 5.881825704686322),
    (3.5, 100.0, 0.7763566049679452),
    (3.5, 1000.0, 0.20806636170869458),
    (3.5, 10000.0, 0.06415832714532302),
    (3.5, 100000.0, 0.020171743331151976),
    (3.5, 1000000.0, 0.006368528035223904),
    (10.0, 1e-05, 28600000.000000007),
    (10.0, 0.001, 286000.0000010913),
    (10.0, 0.1, 2860.000109126976),
    (10.0, 1.0, 286.0010912620647),
    (10.0, 10.0, 28.61090492970145),
    (10.0, 100.0, 2.962065966155093),
    (10.0, 1000.0, 0.5367332905010079),
    (10.0, 10000.0, 0.15764066351840825),
    (10.0, 100000.0, 0.04933371916237217),
    (10.0, 1000000.0, 0.015568298875022521),
];

/// (alpha, x, ber_alpha(x), bei_alpha(x)) from the defining series.
pub const KELVIN_TABLE: &[(f64, f64, f64, f64)] = &[
    (-0.5, 0.5, 0.5609757231092996, -0.9858045792298932),
    (-0.5, 5.0, -4.334221307892964, 4.328672922130334),
    (-0.5, 18.0, 16679.329842538507, -26946.9627814102),
    (-0.5, 25.0, -2667013.6069155117, -2700349.9427542626),
    (-0.5, 60.0, -1.2596965993333397e+17, -5.439204743105066e+16),
    (-0.5, 200.0, -3.1655690604512883e+59, 6.682666185392604e+59),
    (-0.5, 900.0, 2.6230710998196467e+274, 1.8579805712744037e+274),
    (0.0, 0.5, 0.9990234639908383, 0.062493218382199456),
    (0.0, 5.0, -6.230082478666358, 0.11603438155020038),
    (0.0, 18.0, 30962.32727977372, -7454.337021846349),
    (0.0, 25.0, 9797.71694973549, -3808789.911444036),
    (0.0, 60.0, -5.087796085784348e+16, -1.2764727074061378e+17),
    (0.0, 200.0, -6.965727972432332e+59, 2.491152163279802e+59),
    (0.0, 900.0, 5.413652916235711e+273, 3.168840029109088e+274),
    (1.0, 0.5, -0.18224312375511215, 0.17119517971701534),
    (1.0, 5.0, 0.3597766667766728, -5.797907901792625),
    (1.0, 18.0, 6687.481582253307, 30504.1056508699),
    (1.0, 25.0, 3754808.4731430076, 64306.81439304646),
    (1.0, 60.0, 1.2719674484400093e+17, -4.9821528066526424e+16),
    (1.0, 200.0, -2.474412786072967e+59, -6.957825855377913e+59),
    (1.0, 900.0, -3.167807943545978e+274, 5.3990729598559325e+273),
    (2.0, 0.5, 0.0006510204740026324, -0.031244913792168524),
    (2.0, 5.0, 4.4884262727291135, 1.4221014077546614),
    (2.0, 18.0, -29091.11657045266, 4532.2899623316325),
    (2.0, 25.0, -218564.01686031945, 3592748.1260080393),
    (2.0, 60.0, 4.670560015221132e+16, 1.2582351939130939e+17),
    (2.0, 200.0, 6.934025454590673e+59, -2.4244561642284047e+59),
    (2.0, 900.0, -5.355391792045011e+273, -3.164710681624256e+274),
    (3.5, 0.5, -0.0002656289590302299, 0.0006169088518889174),
    (3.5, 5.0, -2.4576644443166615, -0.4140451869718939),
    (3.5, 18.0, 17931.23227621327, -17455.01183807354),
    (3.5, 25.0, -1820927.5769508483, -2634327.7395932754),
    (3.5, 60.0, -1.1344630962264362e+17, -5.893733196241972e+16),
    (3.5, 200.0, -3.237685014484507e+59, 6.474945319094626e+59),
    (3.5, 900.0, 2.6019816378424452e+274, 1.8615387324205335e+274),
    (5.5, 0.5, 1.5606852078766414e-06, 6.641091240887208e-07),
    (5.5, 5.0, 0.1273187926371737, 0.5550543986853835),
    (5.5, 18.0, -16064.595289450754, 6940.9733734149695),
    (5.5, 25.0, 836774.4989061358, 2333635.4832843193),
    (5.5, 60.0, 9.576173196305552e+16, 6.361514324504255e+16),
    (5.5, 200.0, 3.334913023822487e+59, -6.168820898981589e+59),
    (5.5, 900.0, -2.570502556676293e+274, -1.8666590447320457e+274),
    (12.0, 0.5, -1.2443383306367406e-16, -5.982441473988872e-19),
    (12.0, 5.0, -0.00011126181496119302, -5.7983200468232296e-05),
    (12.0, 18.0, -1434.2576999982905, 887.658712243014),
    (12.0, 25.0, 421745.57707589405, 222561.03532336827),
    (12.0, 60.0, 2.690195462242416e+16, -5.211685994738597e+16),
    (12.0, 200.0, -5.712543552243971e+59, 5.044103168528366e+58),
    (12.0, 900.0, 3.413332544864578e+273, 3.018706232497582e+274),
];

/// (alpha, omega, f_alpha(omega), g_alpha(omega)) from the separate real series.
pub const FG_TABLE: &[(f64, f64, f64, f64)] = &[
    (-0.5, 0.001, 0.564189560039857, 0.0002820947909902815),
    (-0.5, 0.5, 0.5583134832505557, 0.1409494511650216),
    (-0.5, 1.0, 0.5406956758526595, 0.2813113505991148),
    (-0.5, 9.0, -1.2487683135270329, 1.976760927175665),
    (-0.5, 16.0, -4.556446080541297, 1.4652015387494146),
    (-0.5, 100.0, 234.27421680995005, 235.44081282382984),
    (-0.5, 324.0, 93835.95171234121, 15292.60574556495),
    (-0.5, 1000.0, -1352577757.3986473, -523885738.38576907),
    (-0.5, 3000.0, 9586943218119394.0, 1.599073334402208e+16),
    (0.0, 0.001, 0.999999984375, 0.00024999999956597225),
    (0.0, 0.5, 0.9960941738478932, 0.12494574864703527),
    (0.0, 1.0, 0.9843817812130868, 0.24956604003665972),
    (0.0, 9.0, -0.2213802495986939, 1.9375867852660427),
    (0.0, 16.0, -2.56341655725858, 2.2926903226992996),
    (0.0, 100.0, 138.84046594163266, 56.37045855390664),
    (0.0, 324.0, 30962.32727977372, -7454.337021846349),
    (0.0, 1000.0, -365675617.2030044, 9519558.668230444),
    (0.0, 3000.0, 2869943148354128.0, 2120727461742244.5),
    (1.0, 0.001, 0.9999999947916667, 0.00012499999989149305),
    (1.0, 0.5, 0.9986980014366658, 0.062486436985154804),
    (1.0, 1.0, 0.9947930229361946, 0.12489150435806191),
    (1.0, 9.0, 0.5869882160385743, 1.0465644214862695),
    (1.0, 16.0, -0.2455687203153613, 1.5673269814193218),
    (1.0, 100.0, 27.061860343192922, -10.239051678719923),
    (1.0, 324.0, 1871.2107093210593, -2922.0470595147162),
    (1.0, 1000.0, -15939494.615057679, 16411577.742059851),
    (1.0, 3000.0, 128152540515769.66, -18382590625845.062),
    (2.0, 0.001, 0.49999999869791667, 4.166666664496528e-05),
    (2.0, 0.5, 0.49967449329504365, 0.02083062071018092),
    (2.0, 1.0, 0.4986981427143912, 0.04164496689243108),
    (2.0, 9.0, 0.39600993945767704, 0.35927487361656363),
    (2.0, 16.0, 0.18134083531999454, 0.5794619592358046),
    (2.0, 100.0, 2.6643804093050623, -4.471144223937589),
    (2.0, 324.0, -55.95419706582262, -359.149587289539),
    (2.0, 1000.0, -27568.07629531763, 1398944.4903517868),
    (2.0, 3000.0, 2852146736490.786, -3655720810451.1445),
    (3.5, 0.001, 0.08597174595586982, 4.776208113298331e-06),
    (3.5, 0.5, 0.08594460924313675, 0.0023879301008479523),
    (3.5, 1.0, 0.08586320747693796, 0.004774816513876966),
    (3.5, 9.0, 0.07725511173872075, 0.041975369711130806),
    (3.5, 16.0, 0.05893792771259919, 0.07079031359623775),
    (3.5, 100.0, -0.11247159616753812, -0.3276584452503191),
    (3.5, 324.0, -10.511345994940712, -4.520601120499295),
    (3.5, 1000.0, 17743.35998712355, 9846.51453168529),
    (3.5, 3000.0, -13662658159.586239, -27463847483.82147),
    (10.0, 0.001, 2.7557319217461903e-07, 6.263027095942226e-12),
    (10.0, 0.5, 2.7555688239014833e-07, 3.131461272841369e-09),
    (10.0, 1.0, 2.7550795424123895e-07, 6.262608898317089e-09),
    (10.0, 9.0, 2.703010037947231e-07, 5.606274027242055e-08),
    (10.0, 16.0, 2.58993869623874e-07, 9.850198531202619e-08),
    (10.0, 100.0, -2.0575317837423285e-07, 2.670117616820223e-07),
    (10.0, 324.0, 1.1929378577053403e-06, 2.1930262055221888e-07),
    (10.0, 1000.0, -0.00010851909375760815, 5.414060171046976e-05),
    (10.0, 3000.0, 7.560043891349237, -2.192516599972619),
    (12.0, 0.001, 2.0876756984283492e-09, 4.0147609590062586e-14),
    (12.0, 0.5, 2.0875860840730205e-09, 2.0073555865630945e-11),
    (12.0, 1.0, 2.0873172457659252e-09, 4.014561816604514e-11),
    (12.0, 9.0, 2.0586913845097986e-09, 3.598780706359638e-10),
    (12.0, 16.0, 1.9964186570289296e-09, 6.342287432180404e-10),
    (12.0, 100.0, -7.704525059455129e-10, 2.242357196399239e-09),
    (12.0, 324.0, 5.0782850755228215e-09, -3.142938671723273e-09),
    (12.0, 1000.0, -8.753805806282211e-09, 2.933669389200244e-07),
    (12.0, 3000.0, 2.764617923625904e-05, -0.007884690861902202),
];

/// (alpha, x, I_alpha(x)) from the power series.
pub const BESSEL_I_TABLE: &[(f64, f64, f64)] = &[
    (0.0, 2.0, 2.2795853023360673),
    (0.5, 1.0, 0.9376748882454876),
    (-0.5, 3.0, 4.637757757861503),
    (2.0, 30.0, 730436828561.3804),
    (10.0, 25.0, 771298871.1707267),
    (0.0, 0.01, 1.0000250001562505),
    (3.5, 12.0, 11161.55907762089),
    (-0.9, 0.2, 0.9188227073998633),
];

/// (alpha, re z, im z, re, im) of I_alpha(z) / I_{alpha+2}(z) as a quotient of series.
pub const RATIO_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (-0.5, 10.0, 0.0, 1.1111111106021843, 0.0),
    (-0.5, 0.001, 0.0, 3000001.199999994, 0.0),
    (-0.5, 3.0, 3.0, 1.1528398592973184, -0.22950941003408556),
    (-0.5, 50.0, 50.0, 1.0099979596000817, -0.010201999591920016),
    (-0.5, 300.0, 300.0, 1.0016666573764919, -0.0016722314814298694),
    (-0.5, 0.5, 2.0, 0.6011250058955141, -0.3485578338621811),
    (-0.5, 200.0, 0.0, 1.0050251256281406, 0.0),
    (0.0, 10.0, 0.0, 1.2341412314764524, 0.0),
    (0.0, 0.001, 0.0, 8000001.3333333265, 0.0),
    (0.0, 3.0, 3.0, 1.2810111830900546, -0.5356024460431504),
    (0.0, 50.0, 50.0, 1.0199923491550205, -0.020607499179908177),
    (0.0, 300.0, 300.0, 1.0033332984952619, -0.0033500347221142018),
    (0.0, 0.5, 2.0, -0.29918496179091775, -0.9039250318320515),
    (0.0, 200.0, 0.0, 1.0100754711002966, 0.0),
    (1.0, 10.0, 0.0, 1.5190045468932256, 0.0),
    (1.0, 0.001, 0.0, 24000001.499999993, 0.0),
    (1.0, 3.0, 3.0, 1.46420748434132, -1.4310043231121472),
    (1.0, 50.0, 50.0, 1.0399643047931846, -0.04203500563648915),
    (1.0, 300.0, 300.0, 1.006666504090125, -0.006722384259895473),
    (1.0, 0.5, 2.0, -3.457939020444232, -2.672146970566989),
    (1.0, 200.0, 0.0, 1.0202521983983115, 0.0),
    (3.5, 10.0, 0.0, 2.4877934561629527, 0.0),
    (3.5, 0.001, 0.0, 99000001.69230768, 0.0),
    (3.5, 3.0, 3.0, 1.6822661655082694, -5.562032356089541),
    (3.5, 50.0, 50.0, 1.0897249242825535, -0.09927035300171054),
    (3.5, 300.0, 300.0, 1.0149987458750007, -0.015251250042291088),
    (3.5, 0.5, 2.0, -18.847686530617356, -10.969546887167986),
    (3.5, 200.0, 0.0, 1.046141956786984, 0.0),
];

/// (nu, k, j_nu_k) Bessel zeros.
pub const ZERO_TABLE: &[(f64, u32, f64)] = &[
    (-0.5, 1, 1.5707963267948966),
    (-0.5, 2, 4.71238898038469),
    (-0.5, 3, 7.853981633974483),
    (-0.5, 10, 29.845130209103036),
    (-0.5, 100, 312.58846903218443),
    (-0.5, 1000, 3140.0218572629983),
    (0.0, 1, 2.404825557695773),
    (0.0, 2, 5.520078110286311),
    (0.0, 3, 8.653727912911013),
    (0.0, 10, 30.634606468431976),
    (0.0, 100, 313.37426607752786),
    (0.0, 1000, 3140.8072952250786),
    (0.5, 1, 3.141592653589793),
    (0.5, 2, 6.283185307179586),
    (0.5, 3, 9.42477796076938),
    (0.5, 10, 31.41592653589793),
    (0.5, 100, 314.1592653589793),
    (0.5, 1000, 3141.5926535897934),
    (1.0, 1, 3.8317059702075125),
    (1.0, 2, 7.015586669815619),
    (1.0, 3, 10.173468135062722),
    (1.0, 10, 32.189679910974405),
    (1.0, 100, 314.94347283776716),
    (1.0, 1000, 3142.377932416818),
    (2.0, 1, 5.135622301840683),
    (2.0, 2, 8.417244140399864),
    (2.0, 3, 11.619841172149059),
    (2.0, 10, 33.7165195092227),
    (2.0, 100, 316.5095358681284),
    (2.0, 1000, 3143.948251696135),
    (2.5, 1, 5.76345919689455),
    (2.5, 2, 9.095011330476355),
    (2.5, 3, 12.322940970566583),
    (2.5, 10, 34.47048833128499),
    (2.5, 100, 317.29140298173223),
    (2.5, 1000, 3144.733292267411),
    (3.0, 1, 6.380161895923983),
    (3.0, 2, 9.76102312998167),
    (3.0, 3, 13.015200721698434),
    (3.0, 10, 35.218670738610115),
    (3.0, 100, 318.07250141914415),
    (3.0, 1000, 3145.5182535389654),
    (12.0, 1, 16.698249933848246),
    (12.0, 2, 20.789906360078444),
    (12.0, 3, 24.494885043881354),
    (12.0, 10, 47.97429353126905),
    (12.0, 100, 332.00691410946797),
    (12.0, 1000, 3159.6340634343464),
    (25.0, 1, 30.779039186567267),
    (25.0, 2, 35.560573867034506),
    (25.0, 3, 39.76179013422397),
    (25.0, 10, 65.03611761035617),
    (25.0, 100, 351.755358577076),
    (25.0, 1000, 3179.978931312477),
];
