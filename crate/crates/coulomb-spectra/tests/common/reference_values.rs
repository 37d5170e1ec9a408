//! High-precision reference values (40-digit arithmetic, rounded to f64).

#![allow(dead_code, clippy::approx_constant)]

/// (nu, x, J_nu(x), Y_nu(x))
pub const BESSEL: &[(u32, f64, f64, f64)] = &[
    (0, 0.001, 0.9999997500000156, -4.471416611375923),
    (1, 0.001, 0.0004999999375000026, -636.6221672311394),
    (2, 0.001, 1.2499998958333365e-07, -1273239.8630456675),
    (3, 0.001, 2.0833332031250035e-11, -5092958815.560502),
    (0, 0.01, 0.9999750001562495, -3.005455637083646),
    (1, 0.01, 0.004999937500260416, -63.67859628206065),
    (2, 0.01, 1.2499895833658854e-05, -12732.713800775047),
    (3, 0.01, 2.0833203125325523e-08, -5093021.841713737),
    (0, 0.1, 0.99750156206604, -1.5342386513503667),
    (1, 0.1, 0.049937526036242, -6.4589510947020266),
    (2, 0.1, 0.001248958658799919, -127.64478324269015),
    (3, 0.1, 2.0820315754756265e-05, -5099.332378612904),
    (0, 0.5, 0.9384698072408129, -0.44451873350670656),
    (1, 0.5, 0.2422684576748739, -1.471472392670243),
    (2, 0.5, 0.03060402345868264, -5.441370837174266),
    (3, 0.5, 0.002563729994587244, -42.059494304723884),
    (0, 1.0, 0.7651976865579666, 0.08825696421567696),
    (1, 1.0, 0.4400505857449335, -0.7812128213002887),
    (2, 1.0, 0.11490348493190047, -1.6506826068162543),
    (3, 1.0, 0.019563353982668407, -5.821517605964729),
    (0, 2.0, 0.22389077914123567, 0.5103756726497451),
    (1, 2.0, 0.5767248077568734, -0.10703243154093754),
    (2, 2.0, 0.35283402861563773, -0.6174081041906827),
    (3, 2.0, 0.12894324947440206, -1.1277837768404277),
    (0, 3.1622776601683795, -0.31004478898638266, 0.32089778606786884),
    (1, 3.1622776601683795, 0.27642078213653665, 0.3632185910150255),
    (2, 3.1622776601683795, 0.4848686418177108, -0.09117817884293876),
    (3, 3.1622776601683795, 0.3368949275179955, -0.47855087823497044),
    (0, 5.0, -0.1775967713143383, -0.30851762524903376),
    (1, 5.0, -0.32757913759146523, 0.14786314339122683),
    (2, 5.0, 0.046565116277752214, 0.36766288260552454),
    (3, 5.0, 0.364831230613667, 0.14626716269319276),
    (0, 7.3, 0.2882169476350144, 0.0627738863740376),
    (1, 7.3, 0.08257043049325784, -0.2845943718680721),
    (2, 7.3, -0.2655949118834369, -0.14074494715981078),
    (3, 7.3, -0.22810188905952464, 0.20747385287639497),
    (0, 10.0, -0.24593576445134835, 0.055671167283599395),
    (1, 10.0, 0.04347274616886144, 0.24901542420695388),
    (2, 10.0, 0.2546303136851206, -0.0058680824422086145),
    (3, 10.0, 0.058379379305186815, -0.2513626571838373),
    (0, 12.0, 0.047689310796833535, -0.22523731263436145),
    (1, 12.0, -0.2234471044906276, -0.05709921826089652),
    (2, 12.0, -0.08493049487860481, 0.21572077625754535),
    (3, 12.0, 0.19513693953109268, 0.12900614368007832),
    (0, 17.5, -0.10311039822868592, -0.16041119250501118),
    (1, 17.5, -0.1634199694257549, 0.09857279873421605),
    (2, 17.5, 0.08443383029431394, 0.171676655217493),
    (3, 17.5, 0.1827191306358838, -0.059332420398789075),
    (0, 24.9, 0.0832459683530155, -0.13649918399676522),
    (1, 24.9, -0.13485569953140886, -0.08600255759555425),
    (2, 24.9, -0.09407775144790777, 0.1295913480453151),
    (3, 24.9, 0.11974280773254818, 0.10682044483174945),
    (0, 25.1, 0.10827567149994945, -0.11676770763803694),
    (1, 25.1, -0.11463478413442257, -0.11062223322783099),
    (2, 25.1, -0.1174099172477122, 0.10795318706211415),
    (3, 25.1, 0.0959240403499266, 0.12782592837717188),
    (0, 40.0, 0.00736689058423729, 0.12593641705826092),
    (1, 40.0, 0.126038318037585, -0.005793505821549633),
    (2, 40.0, -0.0010649746823580396, -0.1262260923493384),
    (3, 40.0, -0.1261448155058208, -0.006829103413384208),
    (0, 100.0, 0.019985850304223122, -0.07724431336508315),
    (1, 100.0, -0.07714535201411216, -0.020372312002759792),
    (2, 100.0, -0.021528757344505364, 0.07683686712502795),
    (3, 100.0, 0.07628420172033194, 0.02344578668776091),
    (0, 333.3, 0.038466654416718676, -0.020745232486426936),
    (1, 333.3, -0.020687550206813364, -0.038497818590544026),
    (2, 333.3, -0.038590792131731055, 0.020514222473882415),
    (3, 333.3, 0.020224414387650675, 0.03874401387975954),
    (0, 1000.0, 0.024786686152420176, 0.0047159179776228135),
    (1, 1000.0, 0.004728311907089524, -0.024784331292351778),
    (2, 1000.0, -0.024777229528605997, -0.0047654866402075165),
    (3, 1000.0, -0.0048274208252039475, 0.024765269345790947),
];

/// (a, b, z, ln U) with complex a, z as (re, im) and ln U = (ln|U|, arg U).
pub type KummerCase = ((f64, f64), i32, (f64, f64), (f64, f64));

/// Reference values of `U(a, b, z)`.
pub const KUMMER_U: &[KummerCase] = &[
    ((-1.1410886614690486e-05, -22.82177322937907), -1, (5.477225575051433e-08, -0.10954451150101953), (31.562759681836827, 1.9469265095415635)),
    ((-1.1410886614690486e-05, -22.82177322937907), 0, (5.477225575051433e-08, -0.10954451150101953), (34.183865165928, 1.5113842031993467)),
    ((-22.82177322937907, 1.1410886614690486e-05), -1, (0.10954451150101953, 5.477225575051433e-08), (45.02376859578526, 3.1415449037640126)),
    ((-22.82177322937907, 1.1410886614690486e-05), 0, (0.10954451150101953, 5.477225575051433e-08), (45.250008261994296, -0.0004273046238123414)),
    ((-3.410443171134815, -22.565509316427875), -1, (0.016370127221447116, -0.1083144447188538), (41.814672898693274, 2.037564522994394)),
    ((-3.410443171134815, -22.565509316427875), 0, (0.016370127221447116, -0.1083144447188538), (44.43113256622931, 1.4561908219323343)),
    ((-22.565509316427875, 3.410443171134815), -1, (0.1083144447188538, 0.016370127221447116), (54.04295462796302, -2.127939860940427)),
    ((-22.565509316427875, 3.410443171134815), 0, (0.1083144447188538, 0.016370127221447116), (56.60928819263547, -0.275767073398238)),
    ((-15.556205205609619, -16.6984374399013), -1, (0.07466978498692617, -0.08015249971152626), (67.6347571401728, -2.075112001677435)),
    ((-15.556205205609619, -16.6984374399013), 0, (0.07466978498692617, -0.08015249971152626), (70.22781491435319, 3.03518937091019)),
    ((-16.6984374399013, 15.556205205609619), -1, (0.08015249971152626, 0.07466978498692617), (68.52151236013235, 1.9463275306085754)),
    ((-16.6984374399013, 15.556205205609619), 0, (0.08015249971152626, 0.07466978498692617), (71.11156086108907, -3.0931893752578925)),
    ((-22.489710266752283, -3.878951591715252), -1, (0.10795060928041096, -0.01861896764023321), (55.20166253082496, -2.496861857506178)),
    ((-22.489710266752283, -3.878951591715252), 0, (0.10795060928041096, -0.01861896764023321), (57.76870563613339, 1.9554811164772297)),
    ((-3.878951591715252, 22.489710266752283), -1, (0.01861896764023321, 0.10795060928041096), (43.15066755707187, -1.020256524562958)),
    ((-3.878951591715252, 22.489710266752283), 0, (0.01861896764023321, 0.10795060928041096), (45.766432904297304, -0.4186086475539368)),
    ((-4.419417382415738e-06, -8.83883476483074), -1, (1.414213562373036e-07, -0.28284271247458365), (10.970464282881132, 1.3768785607717502)),
    ((-4.419417382415738e-06, -8.83883476483074), 0, (1.414213562373036e-07, -0.28284271247458365), (12.692040244460399, 0.9856675511422874)),
    ((-8.83883476483074, 4.419417382415738e-06), -1, (0.28284271247458365, 1.414213562373036e-07), (8.487415153589073, 3.1415805071129568)),
    ((-8.83883476483074, 4.419417382415738e-06), 0, (0.28284271247458365, 1.414213562373036e-07), (8.166150043211328, -0.000102220913752229)),
    ((-1.320858960499195, -8.739584178121346), -1, (0.04226748673597425, -0.2796666936998831), (13.715956576602618, -0.7987605350220678)),
    ((-1.320858960499195, -8.739584178121346), 0, (0.04226748673597425, -0.2796666936998831), (15.425993589508657, -1.3283750201656082)),
    ((-8.739584178121346, 1.320858960499195), -1, (0.2796666936998831, 0.04226748673597425), (11.641993199139785, -0.018416531057435438)),
    ((-8.739584178121346, 1.320858960499195), 0, (0.2796666936998831, 0.04226748673597425), (13.216522613466383, 1.7783166366810055)),
    ((-6.024892369151116, -6.467277011242416), -1, (0.19279655581283575, -0.20695286435975732), (19.373651681422047, -1.7133034150471578)),
    ((-6.024892369151116, -6.467277011242416), 0, (0.19279655581283575, -0.20695286435975732), (21.022186958792584, -2.8172798057829227)),
    ((-6.467277011242416, 6.024892369151116), -1, (0.20695286435975732, 0.19279655581283575), (19.311186835176642, -2.67654433024336)),
    ((-6.467277011242416, 6.024892369151116), 0, (0.20695286435975732, 0.19279655581283575), (20.951521133281748, -1.502092127297452)),
    ((-8.710227332416157, -1.5023114915457922), -1, (0.278727274637317, -0.04807396772946535), (12.116238253232382, 0.46567844487863963)),
    ((-8.710227332416157, -1.5023114915457922), 0, (0.278727274637317, -0.04807396772946535), (13.692973669342496, -1.3089549300216379)),
    ((-1.5023114915457922, 8.710227332416157), -1, (0.04807396772946535, 0.278727274637317), (14.065252598529224, 1.1467760131779616)),
    ((-1.5023114915457922, 8.710227332416157), 0, (0.04807396772946535, 0.278727274637317), (15.773540524791033, 1.695711089284824)),
    ((-1.3975424859373106e-06, -2.7950849718743878), -1, (4.472135954999393e-07, -0.8944271909998041), (2.9947026928268525, -3.107088465081587)),
    ((-1.3975424859373106e-06, -2.7950849718743878), 0, (4.472135954999393e-07, -0.8944271909998041), (3.7563438121253547, 2.91796270651887)),
    ((-2.7950849718743878, 1.3975424859373106e-06), -1, (0.8944271909998041, 4.472135954999393e-07), (0.45993999308560807, 3.1415917855776603)),
    ((-2.7950849718743878, 1.3975424859373106e-06), 0, (0.8944271909998041, 4.472135954999393e-07), (-2.393959122461038, -9.254165668124783e-05)),
    ((-0.4176922783019832, -2.763699180563416), -1, (0.13366152905663464, -0.8843837377802932), (3.459818458910589, 2.6364090811792655)),
    ((-0.4176922783019832, -2.763699180563416), 0, (0.13366152905663464, -0.8843837377802932), (4.193337007312631, 2.2711498702164534)),
    ((-2.763699180563416, 0.4176922783019832), -1, (0.8843837377802932, 0.13366152905663464), (1.024596339430307, 2.8580462018431305)),
    ((-2.763699180563416, 0.4176922783019832), 0, (0.8843837377802932, 0.13366152905663464), (1.115139985077298, -1.905846781676315)),
    ((-1.9052382543885515, -2.0451325614772418), -1, (0.6096762414043365, -0.6544424196727174), (3.922966299121239, -0.24537819186832266)),
    ((-1.9052382543885515, -2.0451325614772418), 0, (0.6096762414043365, -0.6544424196727174), (4.46772818931362, -1.0796327203217415)),
    ((-2.0451325614772418, 1.9052382543885515), -1, (0.6544424196727174, 0.6096762414043365), (3.794278108414953, 0.6020890037565871)),
    ((-2.0451325614772418, 1.9052382543885515), 0, (0.6544424196727174, 0.6096762414043365), (4.308604466736699, 1.4996237390488631)),
    ((-2.7544157308287627, -0.4750726068329496), -1, (0.881413033865204, -0.15202323418654387), (1.1527142004870385, -2.8119547007416914)),
    ((-2.7544157308287627, -0.4750726068329496), 0, (0.881413033865204, -0.15202323418654387), (1.2972912036098467, 1.972536025299154)),
    ((-0.4750726068329496, 2.7544157308287627), -1, (0.15202323418654387, 0.881413033865204), (3.5156217977977957, -2.553243318647187)),
    ((-0.4750726068329496, 2.7544157308287627), 0, (0.15202323418654387, 0.881413033865204), (4.2446728488893015, -2.1729534353772064)),
    ((-6.249999999999739e-07, -1.2499999999998437), -1, (9.999999999999582e-07, -1.99999999999975), (1.3537625544680112, 1.5586766934988714)),
    ((-6.249999999999739e-07, -1.2499999999998437), 0, (9.999999999999582e-07, -1.99999999999975), (1.6628829054169858, 1.4401289854465018)),
    ((-1.2499999999998437, 6.249999999999739e-07), -1, (1.99999999999975, 9.999999999999582e-07), (1.2781193392254127, 6.076491533844407e-08)),
    ((-1.2499999999998437, 6.249999999999739e-07), 0, (1.99999999999975, 9.999999999999582e-07), (0.6891074315991875, 8.878350008593866e-07)),
    ((-0.18679766559199903, -1.235963847420053), -1, (0.29887626494719843, -1.9775421558720845), (1.503678784906117, 1.3634821369793926)),
    ((-0.18679766559199903, -1.235963847420053), 0, (0.29887626494719843, -1.9775421558720845), (1.784341607099817, 1.1853935322790559)),
    ((-1.235963847420053, 0.18679766559199903), -1, (1.9775421558720845, 0.29887626494719843), (1.3083617548574615, 0.012007085101127938)),
    ((-1.235963847420053, 0.18679766559199903), 0, (1.9775421558720845, 0.29887626494719843), (0.7890314472769834, 0.2379915650766465)),
    ((-0.8520484500291677, -0.9146110860922761), -1, (1.3632775200466682, -1.4633777377476418), (1.6900820863386812, 0.47464341238866886)),
    ((-0.8520484500291677, -0.9146110860922761), 0, (1.3632775200466682, -1.4633777377476418), (1.7461681942379612, 0.09618377450531715)),
    ((-0.9146110860922761, 0.8520484500291677), -1, (1.4633777377476418, 1.3632775200466682), (1.6661189070880535, -0.3812167542986758)),
    ((-0.9146110860922761, 0.8520484500291677), 0, (1.4633777377476418, 1.3632775200466682), (1.6801640584698543, 0.01326473813554455)),
    ((-1.2318121624855751, -0.2124589286253013), -1, (1.9708994599769203, -0.33993428580048207), (1.3169349396422378, -0.011650018511427917)),
    ((-1.2318121624855751, -0.2124589286253013), 0, (1.9708994599769203, -0.33993428580048207), (0.8157773519859655, -0.26249982912915776)),
    ((-0.2124589286253013, 1.2318121624855751), -1, (0.33993428580048207, 1.9708994599769203), (1.5216455276486949, -1.3345258954567774)),
    ((-0.2124589286253013, 1.2318121624855751), 0, (0.33993428580048207, 1.9708994599769203), (1.797623116629784, -1.1483772273690735)),
    ((-2.2821773229380973e-05, -45.64354645875814), -1, (5.477225575051433e-08, -0.10954451150101953), (66.8508286360498, 1.6238286099047419)),
    ((-2.2821773229380973e-05, -45.64354645875814), 0, (5.477225575051433e-08, -0.10954451150101953), (69.8509292925695, 1.305388502024074)),
    ((-45.64354645875814, 2.2821773229380973e-05), -1, (0.10954451150101953, 5.477225575051433e-08), (123.93385645719631, -3.14154337118274)),
    ((-45.64354645875814, 2.2821773229380973e-05), 0, (0.10954451150101953, 5.477225575051433e-08), (127.64277659160693, -9.966521556515899e-05)),
    ((-6.82088634226963, -45.13101863285575), -1, (0.016370127221447116, -0.1083144447188538), (92.06677153692983, 1.2294551170542007)),
    ((-6.82088634226963, -45.13101863285575), 0, (0.016370127221447116, -0.1083144447188538), (95.06453354028504, 0.7642392762690183)),
    ((-45.13101863285575, 6.82088634226963), -1, (0.1083144447188538, 0.016370127221447116), (142.95714252760314, 1.9739313850820503)),
    ((-45.13101863285575, 6.82088634226963), 0, (0.1083144447188538, 0.016370127221447116), (145.92395538164044, -2.5802862826802184)),
    ((-31.112410411219237, -33.3968748798026), -1, (0.07466978498692617, -0.08015249971152626), (160.47914998342765, 2.814228359600156)),
    ((-31.112410411219237, -33.3968748798026), 0, (0.07466978498692617, -0.08015249971152626), (163.46357692578758, 1.7574596658591235)),
    ((-33.3968748798026, 31.112410411219237), -1, (0.08015249971152626, 0.07466978498692617), (163.82888144336434, -1.378827219707431)),
    ((-33.3968748798026, 31.112410411219237), 0, (0.08015249971152626, 0.07466978498692617), (166.811458270762, -0.25168667936939054)),
    ((-44.979420533504566, -7.757903183430504), -1, (0.10795060928041096, -0.01861896764023321), (145.17062208374807, 2.0256112036064793)),
    ((-44.979420533504566, -7.757903183430504), 0, (0.10795060928041096, -0.01861896764023321), (148.13794752620635, 0.3176625868303545)),
    ((-7.757903183430504, 44.979420533504566), -1, (0.01861896764023321, 0.10795060928041096), (95.38601295641374, 0.940980977284357)),
    ((-7.757903183430504, 44.979420533504566), 0, (0.01861896764023321, 0.10795060928041096), (98.38341278245964, 1.4265747034425806)),
    ((-8.838834764831477e-06, -17.67766952966148), -1, (1.414213562373036e-07, -0.28284271247458365), (24.307930063185, 0.1067290719879579)),
    ((-8.838834764831477e-06, -17.67766952966148), 0, (1.414213562373036e-07, -0.28284271247458365), (26.395592750227195, -0.19007514379970858)),
    ((-17.67766952966148, 8.838834764831477e-06), -1, (0.28284271247458365, 1.414213562373036e-07), (29.478067445448332, -3.141538847176469)),
    ((-17.67766952966148, 8.838834764831477e-06), 0, (0.28284271247458365, 1.414213562373036e-07), (32.564598938794084, -2.6905370955818455e-05)),
    ((-2.64171792099839, -17.479168356242692), -1, (0.04226748673597425, -0.2796666936998831), (31.59095722103838, 1.690098092978921)),
    ((-2.64171792099839, -17.479168356242692), 0, (0.04226748673597425, -0.2796666936998831), (33.67275025508392, 1.2518235121656411)),
    ((-17.479168356242692, 2.64171792099839), -1, (0.2796666936998831, 0.04226748673597425), (37.40180374474052, 2.715928773850439)),
    ((-17.479168356242692, 2.64171792099839), 0, (0.2796666936998831, 0.04226748673597425), (39.40238419889831, -1.8776198037208556)),
    ((-12.049784738302233, -12.934554022484832), -1, (0.19279655581283575, -0.20695286435975732), (49.25720660256706, 2.0893046195071174)),
    ((-12.049784738302233, -12.934554022484832), 0, (0.19279655581283575, -0.20695286435975732), (51.30448045477654, 1.073890437076115)),
    ((-12.934554022484832, 12.049784738302233), -1, (0.20695286435975732, 0.19279655581283575), (49.7258032603937, 2.424440175774747)),
    ((-12.934554022484832, 12.049784738302233), 0, (0.20695286435975732, 0.19279655581283575), (51.768204033770374, -2.773729536910485)),
    ((-17.420454664832313, -3.0046229830915845), -1, (0.278727274637317, -0.04807396772946535), (38.313078549445265, -1.5333242613216225)),
    ((-17.420454664832313, -3.0046229830915845), 0, (0.278727274637317, -0.04807396772946535), (40.315019065308995, 3.0816169985978696)),
    ((-3.0046229830915845, 17.420454664832313), -1, (0.04807396772946535, 0.278727274637317), (32.53548667463715, -0.9236862265846956)),
    ((-3.0046229830915845, 17.420454664832313), 0, (0.04807396772946535, 0.278727274637317), (34.616363062995234, -0.4657282896779876)),
    ((-2.795084971874621e-06, -5.5901699437487755), -1, (4.472135954999393e-07, -0.8944271909998041), (6.906877814707691, 2.096439511017134)),
    ((-2.795084971874621e-06, -5.5901699437487755), 0, (4.472135954999393e-07, -0.8944271909998041), (7.975281766164603, 1.8687654943153293)),
    ((-5.5901699437487755, 2.795084971874621e-06), -1, (0.8944271909998041, 4.472135954999393e-07), (2.8273788497506294, -3.1415786619754713)),
    ((-5.5901699437487755, 2.795084971874621e-06), 0, (0.8944271909998041, 4.472135954999393e-07), (4.349955926823492, -7.167530143198999e-06)),
    ((-0.8353845566039664, -5.527398361126832), -1, (0.13366152905663464, -0.8843837377802932), (8.316663918870699, 0.8109966535862551)),
    ((-0.8353845566039664, -5.527398361126832), 0, (0.13366152905663464, -0.8843837377802932), (9.368984530133224, 0.461986075738172)),
    ((-5.527398361126832, 0.8353845566039664), -1, (0.8843837377802932, 0.13366152905663464), (5.364164209422872, 2.9395881097143914)),
    ((-5.527398361126832, 0.8353845566039664), 0, (0.8843837377802932, 0.13366152905663464), (6.149440346510024, -1.7929420730262904)),
    ((-3.810476508777103, -4.0902651229544835), -1, (0.6096762414043365, -0.6544424196727174), (10.783968599707553, -0.44715435184720503)),
    ((-3.810476508777103, -4.0902651229544835), 0, (0.6096762414043365, -0.6544424196727174), (11.729192949596221, -1.3109318665998184)),
    ((-4.0902651229544835, 3.810476508777103), -1, (0.6544424196727174, 0.6096762414043365), (10.647073858296821, 1.468026630805463)),
    ((-4.0902651229544835, 3.810476508777103), 0, (0.6544424196727174, 0.6096762414043365), (11.57589305716325, 2.397232330069167)),
    ((-5.508831461657525, -0.9501452136658992), -1, (0.881413033865204, -0.15202323418654387), (5.667703168149448, -2.732348654390075)),
    ((-5.508831461657525, -0.9501452136658992), 0, (0.881413033865204, -0.15202323418654387), (6.45508035852249, 2.028078131726395)),
    ((-0.9501452136658992, 5.508831461657525), -1, (0.15202323418654387, 0.881413033865204), (8.493070885699824, -0.6085113179722218)),
    ((-0.9501452136658992, 5.508831461657525), 0, (0.15202323418654387, 0.881413033865204), (9.54280332681725, -0.2425253483118068)),
    ((-1.2499999999999478e-06, -2.4999999999996874), -1, (9.999999999999582e-07, -1.99999999999975), (2.9803148695577364, -2.6918614710859643)),
    ((-1.2499999999999478e-06, -2.4999999999996874), 0, (9.999999999999582e-07, -1.99999999999975), (3.4869456914504044, -2.827338782015639)),
    ((-2.4999999999996874, 1.2499999999999478e-06), -1, (1.99999999999975, 9.999999999999582e-07), (0.32544821703386684, 1.0692135423904692e-05)),
    ((-2.4999999999996874, 1.2499999999999478e-06), 0, (1.99999999999975, 9.999999999999582e-07), (1.0592109449894376, 3.1415903721992566)),
    ((-0.37359533118399807, -2.471927694840106), -1, (0.29887626494719843, -1.9775421558720845), (3.41350279975036, 3.103998894310772)),
    ((-0.37359533118399807, -2.471927694840106), 0, (0.29887626494719843, -1.9775421558720845), (3.8964362192075868, 2.8830207907843786)),
    ((-2.471927694840106, 0.37359533118399807), -1, (1.9775421558720845, 0.29887626494719843), (1.6490071026708728, 1.1689553399328303)),
    ((-2.471927694840106, 0.37359533118399807), 0, (1.9775421558720845, 0.29887626494719843), (1.5927141466285049, 2.5659570731736743)),
    ((-1.7040969000583355, -1.8292221721845523), -1, (1.3632775200466682, -1.4633777377476418), (3.974671299984526, 0.6076464261384186)),
    ((-1.7040969000583355, -1.8292221721845523), 0, (1.3632775200466682, -1.4633777377476418), (4.260009874262244, 0.028167762600263328)),
    ((-1.8292221721845523, 1.7040969000583355), -1, (1.4633777377476418, 1.3632775200466682), (3.8897700218332267, -0.31048938937647264)),
    ((-1.8292221721845523, 1.7040969000583355), 0, (1.4633777377476418, 1.3632775200466682), (4.137952433504122, 0.31607394225406926)),
    ((-2.4636243249711502, -0.4249178572506026), -1, (1.9708994599769203, -0.33993428580048207), (1.7931647893755362, -1.1805294443196295)),
    ((-2.4636243249711502, -0.4249178572506026), 0, (1.9708994599769203, -0.33993428580048207), (1.7112547692460662, -2.504437636939184)),
    ((-0.4249178572506026, 2.4636243249711502), -1, (0.33993428580048207, 1.9708994599769203), (3.46620599720959, -3.029726868120419)),
    ((-0.4249178572506026, 2.4636243249711502), 0, (0.33993428580048207, 1.9708994599769203), (3.9451530894185147, -2.7968568541505565)),
    ((-6.846531968814291e-06, -13.693063937627443), -1, (5.477225575051433e-08, -0.10954451150101953), (17.663090974232226, 0.07930720511266935)),
    ((-6.846531968814291e-06, -13.693063937627443), 0, (5.477225575051433e-08, -0.10954451150101953), (19.982129583540083, -0.45882782193984223)),
    ((-13.693063937627443, 6.846531968814291e-06), -1, (0.10954451150101953, 5.477225575051433e-08), (19.11997886364478, -2.1147656958057578e-05)),
    ((-13.693063937627443, 6.846531968814291e-06), 0, (0.10954451150101953, 5.477225575051433e-08), (20.350243270872088, 3.141519508158246)),
    ((-2.046265902680889, -13.539305589856724), -1, (0.016370127221447116, -0.1083144447188538), (22.777817956494818, 2.813251436552667)),
    ((-2.046265902680889, -13.539305589856724), 0, (0.016370127221447116, -0.1083144447188538), (25.08895952864504, 2.130047388483281)),
    ((-13.539305589856724, 2.046265902680889), -1, (0.1083144447188538, 0.016370127221447116), (24.310509832410084, 0.516988903988012)),
    ((-13.539305589856724, 2.046265902680889), 0, (0.1083144447188538, 0.016370127221447116), (26.547203281005846, 2.4853219087405782)),
    ((-9.33372312336577, -10.01906246394078), -1, (0.07466978498692617, -0.08015249971152626), (34.583939361550634, -1.261207239664377)),
    ((-9.33372312336577, -10.01906246394078), 0, (0.07466978498692617, -0.08015249971152626), (36.85809068920094, -2.538103639681001)),
    ((-10.01906246394078, 9.33372312336577), -1, (0.08015249971152626, 0.07466978498692617), (34.76993825960348, -1.72397309782548)),
    ((-10.01906246394078, 9.33372312336577), 0, (0.08015249971152626, 0.07466978498692617), (37.039587784449246, -0.375452720131595)),
    ((-13.49382616005137, -2.327370955029151), -1, (0.10795060928041096, -0.01861896764023321), (25.028391220773127, 0.3207296662755617)),
    ((-13.49382616005137, -2.327370955029151), 0, (0.10795060928041096, -0.01861896764023321), (27.26598188420205, -1.6257862637718978)),
    ((-2.327370955029151, 13.49382616005137), -1, (0.01861896764023321, 0.10795060928041096), (23.43707832090439, -2.238367378370128)),
    ((-2.327370955029151, 13.49382616005137), 0, (0.01861896764023321, 0.10795060928041096), (25.747062142851473, -1.5349566892457764)),
    ((-2.6516504294494425e-06, -5.303300858898443), -1, (1.414213562373036e-07, -0.28284271247458365), (5.841895446417649, 0.16505686625869223)),
    ((-2.6516504294494425e-06, -5.303300858898443), 0, (1.414213562373036e-07, -0.28284271247458365), (7.274872197835003, -0.29698836087355907)),
    ((-5.303300858898443, 2.6516504294494425e-06), -1, (0.28284271247458365, 1.414213562373036e-07), (0.6370100852517493, -4.050403922873372e-05)),
    ((-5.303300858898443, 2.6516504294494425e-06), 0, (0.28284271247458365, 1.414213562373036e-07), (3.060377393790591, 3.2151384539259866e-06)),
    ((-0.7925153762995171, -5.243750506872808), -1, (0.04226748673597425, -0.2796666936998831), (7.105987365373078, -1.0280809627630965)),
    ((-0.7925153762995171, -5.243750506872808), 0, (0.04226748673597425, -0.2796666936998831), (8.519664078316998, -1.6250176426720588)),
    ((-5.243750506872808, 0.7925153762995171), -1, (0.2796666936998831, 0.04226748673597425), (3.7696691323119644, -2.5804601313497315)),
    ((-5.243750506872808, 0.7925153762995171), 0, (0.2796666936998831, 0.04226748673597425), (4.983809103311402, -0.6897080283132829)),
    ((-3.61493542149067, -3.8803662067454496), -1, (0.19279655581283575, -0.20695286435975732), (9.15691810122067, -1.7750737364846287)),
    ((-3.61493542149067, -3.8803662067454496), 0, (0.19279655581283575, -0.20695286435975732), (10.471127448763252, -2.945363702215458)),
    ((-3.8803662067454496, 3.61493542149067), -1, (0.20695286435975732, 0.19279655581283575), (8.995558229034037, 2.72847100390356)),
    ((-3.8803662067454496, 3.61493542149067), 0, (0.20695286435975732, 0.19279655581283575), (10.296787109997823, -2.3122332745288263)),
    ((-5.226136399449693, -0.9013868949274751), -1, (0.278727274637317, -0.04807396772946535), (4.064982808500321, 2.7776857241539155)),
    ((-5.226136399449693, -0.9013868949274751), 0, (0.278727274637317, -0.04807396772946535), (5.276885071158901, 0.9069757060130907)),
    ((-0.9013868949274751, 5.226136399449693), -1, (0.04807396772946535, 0.278727274637317), (7.263084100514516, 1.216314659270056)),
    ((-0.9013868949274751, 5.226136399449693), 0, (0.04807396772946535, 0.278727274637317), (8.673867729513255, 1.8321634471021435)),
    ((-8.385254915623862e-07, -1.6770509831246327), -1, (4.472135954999393e-07, -0.8944271909998041), (1.5768764597582292, 1.5940064161349143)),
    ((-8.385254915623862e-07, -1.6770509831246327), 0, (4.472135954999393e-07, -0.8944271909998041), (2.124554861586451, 1.3387438655470885)),
    ((-1.6770509831246327, 8.385254915623862e-07), -1, (0.8944271909998041, 4.472135954999393e-07), (0.4350489137169531, 1.464503360999463e-06)),
    ((-1.6770509831246327, 8.385254915623862e-07), 0, (0.8944271909998041, 4.472135954999393e-07), (-1.0805402511870388, 3.141586076325943)),
    ((-0.25061536698118997, -1.6582195083380498), -1, (0.13366152905663464, -0.8843837377802932), (1.7735160624642574, 1.329581885969349)),
    ((-0.25061536698118997, -1.6582195083380498), 0, (0.13366152905663464, -0.8843837377802932), (2.2828173034936348, 0.985272994303114)),
    ((-1.6582195083380498, 0.25061536698118997), -1, (0.8843837377802932, 0.13366152905663464), (0.602294616376557, 0.3803680891929608)),
    ((-1.6582195083380498, 0.25061536698118997), 0, (0.8843837377802932, 0.13366152905663464), (-0.19804617597853003, 2.0589078981219746)),
    ((-1.143142952633131, -1.2270795368863452), -1, (0.6096762414043365, -0.6544424196727174), (1.868637652616878, 0.04883228487374096)),
    ((-1.143142952633131, -1.2270795368863452), 0, (0.6096762414043365, -0.6544424196727174), (2.103819388778132, -0.6711876675653277)),
    ((-1.2270795368863452, 1.143142952633131), -1, (0.6544424196727174, 0.6096762414043365), (1.7948326357362299, 0.08912471944986554)),
    ((-1.2270795368863452, 1.143142952633131), 0, (0.6544424196727174, 0.6096762414043365), (1.979338309679534, 0.8590783730788357)),
    ((-1.6526494384972574, -0.2850435640997698), -1, (0.881413033865204, -0.15202323418654387), (0.6447465663878111, -0.41668164391599094)),
    ((-1.6526494384972574, -0.2850435640997698), 0, (0.881413033865204, -0.15202323418654387), (-0.07191918710148712, -2.007727312432161)),
    ((-0.2850435640997698, 1.6526494384972574), -1, (0.15202323418654387, 0.881413033865204), (1.7962924634304835, -1.289566678728585)),
    ((-0.2850435640997698, 1.6526494384972574), 0, (0.15202323418654387, 0.881413033865204), (2.2995077627757317, -0.9328595678366858)),
    ((-3.749999999999843e-07, -0.7499999999999063), -1, (9.999999999999582e-07, -1.99999999999975), (0.7632073610798449, 0.8725443157383675)),
    ((-3.749999999999843e-07, -0.7499999999999063), 0, (9.999999999999582e-07, -1.99999999999975), (0.9642466096546152, 0.7783077456164069)),
    ((-0.7499999999999063, 3.749999999999843e-07), -1, (1.99999999999975, 9.999999999999582e-07), (0.8743842414711643, -1.2922120808806374e-07)),
    ((-0.7499999999999063, 3.749999999999843e-07), 0, (1.99999999999975, 9.999999999999582e-07), (0.6045680606354165, 1.4934502802134342e-07)),
    ((-0.11207859935519941, -0.7415783084520318), -1, (0.29887626494719843, -1.9775421558720845), (0.8358323529699392, 0.774787447652422)),
    ((-0.11207859935519941, -0.7415783084520318), 0, (0.29887626494719843, -1.9775421558720845), (1.010543540642916, 0.6404236875211475)),
    ((-0.7415783084520318, 0.11207859935519941), -1, (1.9775421558720845, 0.29887626494719843), (0.880137663498068, -0.039930093641843856)),
    ((-0.7415783084520318, 0.11207859935519941), 0, (1.9775421558720845, 0.29887626494719843), (0.625136011787301, 0.04129866492681183)),
    ((-0.5112290700175006, -0.5487666516553658), -1, (1.3632775200466682, -1.4633777377476418), (0.9552619786774112, 0.3487455983324158)),
    ((-0.5112290700175006, -0.5487666516553658), 0, (1.3632775200466682, -1.4633777377476418), (0.9512206499149283, 0.11527571271941935)),
    ((-0.5487666516553658, 0.5112290700175006), -1, (1.4633777377476418, 1.3632775200466682), (0.9522002184394592, -0.3036439835314005)),
    ((-0.5487666516553658, 0.5112290700175006), 0, (1.4633777377476418, 1.3632775200466682), (0.9199436346027708, -0.06895912995806511)),
    ((-0.739087297491345, -0.12747535717518077), -1, (1.9708994599769203, -0.33993428580048207), (0.8817900449876976, 0.04585238469548359)),
    ((-0.739087297491345, -0.12747535717518077), 0, (1.9708994599769203, -0.33993428580048207), (0.6310409201466932, -0.045874739953577)),
    ((-0.12747535717518077, 0.739087297491345), -1, (0.33993428580048207, 1.9708994599769203), (0.844661775194718, -0.7605098849185027)),
    ((-0.12747535717518077, 0.739087297491345), 0, (0.33993428580048207, 1.9708994599769203), (1.0151442200796523, -0.6209160674489516)),
    ((-10.0, 0.0), 0, (0.05, 0.0), (11.872412257726523, 3.141592653589793)),
    ((-10.0, 0.0), -1, (0.05, 0.0), (8.283275881302417, 0.0)),
    ((-20.0, 0.0), 0, (0.025, 0.0), (38.39788339273254, 3.141592653589793)),
    ((-20.0, 0.0), -1, (0.025, 0.0), (34.111278893672946, 0.0)),
    ((-40.0, 0.0), 0, (0.0125, 0.0), (105.68348807265717, 3.141592653589793)),
    ((-40.0, 0.0), -1, (0.0125, 0.0), (100.70156794767426, 0.0)),
    ((-80.0, 0.0), 0, (0.00625, 0.0), (268.339695114623, 3.141592653589793)),
    ((-80.0, 0.0), -1, (0.00625, 0.0), (262.66354159984866, 0.0)),
    ((-160.0, 0.0), 0, (0.003125, 0.0), (649.4567165221539, 3.141592653589793)),
    ((-160.0, 0.0), -1, (0.003125, 0.0), (643.0868722264564, 0.0)),
    ((-320.0, 0.0), 0, (0.0015625, 0.0), (1522.9440091481192, 3.141592653589793)),
    ((-320.0, 0.0), -1, (0.0015625, 0.0), (1515.8807457478554, 0.0)),
    ((-10.0, 0.0), 0, (0.25, 0.0), (12.104909092223043, 3.141592653589793)),
    ((-10.0, 0.0), -1, (0.25, 0.0), (10.873649992266609, 0.0)),
    ((-20.0, 0.0), 0, (0.125, 0.0), (38.57614238983968, 3.141592653589793)),
    ((-20.0, 0.0), -1, (0.125, 0.0), (36.62705174759892, 0.0)),
    ((-40.0, 0.0), 0, (0.0625, 0.0), (105.83568571178378, 3.141592653589793)),
    ((-40.0, 0.0), -1, (0.0625, 0.0), (103.18040778861189, 0.0)),
    ((-80.0, 0.0), 0, (0.03125, 0.0), (268.47912729523443, 3.141592653589793)),
    ((-80.0, 0.0), -1, (0.03125, 0.0), (265.12400857484795, 0.0)),
    ((-160.0, 0.0), 0, (0.015625, 0.0), (649.5898323306922, 3.141592653589793)),
    ((-160.0, 0.0), -1, (0.015625, 0.0), (645.538176395116, 0.0)),
    ((-320.0, 0.0), 0, (0.0078125, 0.0), (1523.073983363174, 3.141592653589793)),
    ((-320.0, 0.0), -1, (0.0078125, 0.0), (1518.327474447015, 0.0)),
    ((-10.0, 0.0), 0, (1.0, 0.0), (12.88985359961477, 0.0)),
    ((-10.0, 0.0), -1, (1.0, 0.0), (12.037174589068245, 3.141592653589793)),
    ((-20.0, 0.0), 0, (0.5, 0.0), (39.14987488072446, 0.0)),
    ((-20.0, 0.0), -1, (0.5, 0.0), (37.65777670600471, 3.141592653589793)),
    ((-40.0, 0.0), 0, (0.25, 0.0), (106.30962367386023, 0.0)),
    ((-40.0, 0.0), -1, (0.25, 0.0), (104.13809782039951, 3.141592653589793)),
    ((-80.0, 0.0), 0, (0.125, 0.0), (268.90467169155653, 0.0)),
    ((-80.0, 0.0), -1, (0.125, 0.0), (266.04389825378166, 3.141592653589793)),
    ((-160.0, 0.0), 0, (0.0625, 0.0), (649.9915591185589, 0.0)),
    ((-160.0, 0.0), -1, (0.0625, 0.0), (646.4388834968456, 3.141592653589793)),
    ((-320.0, 0.0), 0, (0.03125, 0.0), (1523.4638963447003, 0.0)),
    ((-320.0, 0.0), -1, (0.03125, 0.0), (1519.218524015728, 3.141592653589793)),
    ((-0.0, 125.0), 0, (0.0, 0.02), (193.83500939395074, 2.0002309232044437)),
    ((-0.0, 125.0), -1, (0.0, 0.02), (189.53738625514006, 1.5409505583589547)),
    ((-0.0, 72.16878364870323), 0, (0.0, 0.034641016151377546), (111.12256145999703, -1.1390006486822675)),
    ((-0.0, 72.16878364870323), -1, (0.0, 0.034641016151377546), (107.37036899764497, -1.594366283154703)),
    ((-0.0, 39.528470752104745), 0, (0.0, 0.06324555320336758), (60.15219959145884, -2.2473431949001195)),
    ((-0.0, 39.528470752104745), -1, (0.0, 0.06324555320336758), (56.99435143013538, -2.6950969456338383)),
    ((1.0, 0.0), 2, (3.0, 0.0), (-1.0986122886681098, 0.0)),
    ((-3.3, 1.2), -1, (0.4, -0.9), (1.2961585662706336, 2.8401178891542154)),
    ((0.7, -4.0), 1, (2.0, 3.0), (-1.1167138309539035, -1.0502904947839635)),
];
