// Values of D_a(z) and D_a'(z) from mpmath at 30 digits.
pub const PCF: &[(f64, f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.0, 0.3, 0.5, 0.0, 0.9664376784365523, -0.02936564611811746, -0.26573770714702233, 0.2564462781934292),
    (0.0, 0.3, 4.5, 0.0, 0.005688187736410868, 0.0028053158922955903, -0.012981814238318444, -0.005951566861466824),
    (0.0, 0.3, 12.0, 0.0, 1.703209803968325e-16, 1.5756171537919237e-16, -1.0258466657093937e-15, -9.411492093224145e-16),
    (0.0, 0.3, 0.4387912809451864, 0.2397127693021015, 0.9294281531242645, -0.09577139587927731, -0.1837791539821565, 0.16430326623043592),
    (0.0, 0.3, 3.9491215285066774, 2.1574149237189135, -0.044265133292852435, 0.03468294422616985, 0.12150368204099338, -0.022340804656333625),
    (0.0, 0.3, 10.530990742684473, 5.753106463250436, -9.028217031888334e-10, 2.9398529057202886e-09, 1.313518027061532e-08, -1.2867889037715018e-08),
    (0.0, 0.3, 0.3535533905932738, 0.3535533905932738, 0.9260263103056631, -0.12564915826868492, -0.12391691774128952, 0.1247484208638711),
    (0.0, 0.3, 3.181980515339464, 3.181980515339464, -0.07903481293238038, 0.7921711628493813, 1.3429842164955585, -1.1028329431014436),
    (0.0, 0.3, 8.48528137423857, 8.48528137423857, -0.6062883584329994, 0.5078889627838794, 4.707331878288964, 0.41559231152849174),
    (0.0, 0.3, 0.1811788772383368, 0.46601954298361314, 0.9259924302050195, -0.15249149719710764, -0.01686879518371173, 0.09285346705410892),
    (0.0, 0.3, 1.6306098951450312, 4.194175886852518, -28.88081355866705, -4.839677356558248, 11.667492428999692, 63.41077306598522),
    (0.0, 0.3, 4.3482930537200835, 11.184469031606715, 2416261125.024878, 235883631436.32724, 1311750817849.7888, -520810027971.80554),
    (0.0, 0.3, 4.23921383018445e-32, 0.5, 0.9161151190017988, -0.16906373400701816, 0.08982705640240414, 0.1042384864867901),
    (0.0, 0.3, 3.8152924471660048e-31, 4.5, 88.8612663376396, 42.1807038976323, 101.23789613075229, -197.0812242998931),
    (0.0, 0.3, 1.017411319244268e-30, 12.0, 1978692230556042.8, 1822825396419852.5, 1.098686854888515e+16, -1.1826366681498766e+16),
    (0.0, 0.3, -0.2080734182735712, 0.45464871341284085, 0.8923068055700959, -0.2040251583603413, 0.19797424773846148, 0.169544349492351),
    (0.0, 0.3, -1.8726607644621407, 4.091838420715567, -6.24678724749317, -13.52611568844254, -34.34149768360514, -0.5065774803668547),
    (0.0, 0.3, -4.993762038565708, 10.91156912190818, -8722457358.890642, 2549873646.97266, -8038621365.52939, 54104873630.281204),
    (0.0, 0.3, -0.3535533905932738, 0.3535533905932738, 0.8805641345157651, -0.257830089426598, 0.25719829470197825, 0.2530601696820411),
    (0.0, 0.3, -3.181980515339464, 3.181980515339464, 0.4895529877201829, -0.35848995265848915, -0.15237506945270582, -0.8594374035609107),
    (0.0, 0.3, -8.48528137423857, 8.48528137423857, 0.3382818997764699, -0.40106704390026726, -0.7217925327452199, -2.700212976846357),
    (0.0, 0.3, -0.4520360710085306, 0.2136899401169149, 0.8957499489643211, -0.3251342877199699, 0.2845161770605817, 0.34451893764907787),
    (0.0, 0.3, -4.068324639076775, 1.923209461052234, 3.0494409333676686, 2.465054197725112, -8.579466676682303, -1.1943713243201026),
    (0.0, 0.3, -10.848865704204735, 5.128558562805957, 2320275.077692933, 495046435.25386053, -1311294668.1302583, -2647388660.201361),
    (0.0, 0.3, -0.5, 8.4784276603689e-32, 0.968736673763385, -0.4047025477520337, 0.2803851032121454, 0.4652729396343735),
    (0.0, 0.3, -4.5, 7.6305848943320095e-31, -16.57771749526208, -24.95361494074616, 35.23002443448746, 48.51445294901616),
    (0.0, 0.3, -12.0, 2.034822638488536e-30, -229877532311424.72, -180517829283310.94, 1364457216623159.8, 1061985202720179.0),
    (0.0, 0.3, 0.4387912809451864, -0.2397127693021015, 1.060749884698492, 0.020453937619132126, -0.31678638737160486, 0.3859291320361227),
    (0.0, 0.3, 3.9491215285066774, -2.1574149237189135, 0.0003428402432728747, -0.07503459811000456, 0.08454231424623304, 0.15073857629127535),
    (0.0, 0.3, 10.530990742684473, -5.753106463250436, 3.853573295328586e-09, -1.5243250029402372e-09, -1.591837519431179e-08, 1.9213644204534616e-08),
    (0.0, 0.3, 0.3535533905932738, -0.3535533905932738, 1.1369938998869071, 0.019797031796572814, -0.31815207266499196, 0.4798610635998566),
    (0.0, 0.3, 3.181980515339464, -3.181980515339464, 0.9050502606512539, -0.871983596287959, -0.05039287118559173, 2.909383528107173),
    (0.0, 0.3, 8.48528137423857, -8.48528137423857, 0.7320538025550645, -1.0309019951563834, 1.2733907726795377, 7.510647603298773),
    (0.0, 0.3, 0.1811788772383368, -0.46601954298361314, 1.2487810874183276, -0.0424578178653868, -0.25681979660916765, 0.6223812909370698),
    (0.0, 0.3, 1.6306098951450312, -4.194175886852518, -44.50972162032661, -39.476546504548736, 122.94315092154822, -59.939458176573844),
    (0.0, 0.3, 4.3482930537200835, -11.184469031606715, 482716771901.6445, -34401911806.153, -868056494900.7262, 2779523233829.5522),
    (0.0, 0.3, -0.2080734182735712, -0.45464871341284085, 1.2843538807941621, -0.30901339537395317, 0.03873446923620957, 0.7244205869541511),
    (0.0, 0.3, -1.8726607644621407, -4.091838420715567, -48.586432846884264, 12.161554530686713, -66.96461974710087, -87.29916254311473),
    (0.0, 0.3, -4.993762038565708, -10.91156912190818, 6098464319.7264, -29598131654.525455, 176256389728.40482, -40019763198.57394),
    (0.0, 0.3, -0.3535533905932738, -0.3535533905932738, 1.1994806509709912, -0.4002043486204279, 0.1575056602325151, 0.6673269343371562),
    (0.0, 0.3, -3.181980515339464, -3.181980515339464, -0.30791998966676837, 2.238694922385085, -2.9456966458388933, 2.7231425985678785),
    (0.0, 0.3, -8.48528137423857, -8.48528137423857, -1.5341327725435425, 1.3860739538403979, -11.817218212555643, -1.504392450205134),
    (0.0, 0.3, -0.4520360710085306, -0.2136899401169149, 1.0928215470625975, -0.434332083030447, 0.23263126011114493, 0.583809436851933),
    (0.0, 0.3, -4.068324639076775, -1.923209461052234, 1.5693789160253888, 5.112364139633129, 2.0200083358060397, -10.827321826534108),
    (0.0, 0.3, -10.848865704204735, -5.128558562805957, 630297656.3391888, -152352915.79747462, -3757110584.8371396, -811879913.9638047),
    (0.0, -0.3, 0.5, 0.0, 0.9664376784365523, 0.02936564611811746, -0.26573770714702233, -0.2564462781934292),
    (0.0, -0.3, 4.5, 0.0, 0.005688187736410868, -0.0028053158922955903, -0.012981814238318444, 0.005951566861466824),
    (0.0, -0.3, 12.0, 0.0, 1.703209803968325e-16, -1.5756171537919237e-16, -1.0258466657093937e-15, 9.411492093224145e-16),
    (0.0, -0.3, 0.4387912809451864, 0.2397127693021015, 1.060749884698492, -0.020453937619132126, -0.31678638737160486, -0.3859291320361227),
    (0.0, -0.3, 3.9491215285066774, 2.1574149237189135, 0.0003428402432728747, 0.07503459811000456, 0.08454231424623304, -0.15073857629127535),
    (0.0, -0.3, 10.530990742684473, 5.753106463250436, 3.853573295328586e-09, 1.5243250029402372e-09, -1.591837519431179e-08, -1.9213644204534616e-08),
    (0.0, -0.3, 0.3535533905932738, 0.3535533905932738, 1.1369938998869071, -0.019797031796572814, -0.31815207266499196, -0.4798610635998566),
    (0.0, -0.3, 3.181980515339464, 3.181980515339464, 0.9050502606512539, 0.871983596287959, -0.05039287118559173, -2.909383528107173),
    (0.0, -0.3, 8.48528137423857, 8.48528137423857, 0.7320538025550645, 1.0309019951563834, 1.2733907726795377, -7.510647603298773),
    (0.0, -0.3, 0.1811788772383368, 0.46601954298361314, 1.2487810874183276, 0.0424578178653868, -0.25681979660916765, -0.6223812909370698),
    (0.0, -0.3, 1.6306098951450312, 4.194175886852518, -44.50972162032661, 39.476546504548736, 122.94315092154822, 59.939458176573844),
    (0.0, -0.3, 4.3482930537200835, 11.184469031606715, 482716771901.6445, 34401911806.153, -868056494900.7262, -2779523233829.5522),
    (0.0, -0.3, 4.23921383018445e-32, 0.5, 1.3072344262607989, 0.15688824184464625, -0.13448060514095467, -0.7122359577262102),
    (0.0, -0.3, 3.8152924471660048e-31, 4.5, 228.04614018984307, -108.25073984702392, -259.807639478164, -505.77944372771884),
    (0.0, -0.3, 1.017411319244268e-30, 12.0, 5077981971422617.0, -4677975865640379.0, -2.8195956678897356e+16, -3.0350387932340416e+16),
    (0.0, -0.3, -0.2080734182735712, 0.45464871341284085, 1.2843538807941621, 0.30901339537395317, 0.03873446923620957, -0.7244205869541511),
    (0.0, -0.3, -1.8726607644621407, 4.091838420715567, -48.586432846884264, -12.161554530686713, -66.96461974710087, 87.29916254311473),
    (0.0, -0.3, -4.993762038565708, 10.91156912190818, 6098464319.7264, 29598131654.525455, 176256389728.40482, 40019763198.57394),
    (0.0, -0.3, -0.3535533905932738, 0.3535533905932738, 1.1994806509709912, 0.4002043486204279, 0.1575056602325151, -0.6673269343371562),
    (0.0, -0.3, -3.181980515339464, 3.181980515339464, -0.30791998966676837, -2.238694922385085, -2.9456966458388933, -2.7231425985678785),
    (0.0, -0.3, -8.48528137423857, 8.48528137423857, -1.5341327725435425, -1.3860739538403979, -11.817218212555643, 1.504392450205134),
    (0.0, -0.3, -0.4520360710085306, 0.2136899401169149, 1.0928215470625975, 0.434332083030447, 0.23263126011114493, -0.583809436851933),
    (0.0, -0.3, -4.068324639076775, 1.923209461052234, 1.5693789160253888, -5.112364139633129, 2.0200083358060397, 10.827321826534108),
    (0.0, -0.3, -10.848865704204735, 5.128558562805957, 630297656.3391888, 152352915.79747462, -3757110584.8371396, 811879913.9638047),
    (0.0, -0.3, -0.5, 8.4784276603689e-32, 0.968736673763385, 0.4047025477520337, 0.2803851032121454, -0.4652729396343735),
    (0.0, -0.3, -4.5, 7.6305848943320095e-31, -16.57771749526208, 24.95361494074616, 35.23002443448746, -48.51445294901616),
    (0.0, -0.3, -12.0, 2.034822638488536e-30, -229877532311424.72, 180517829283310.94, 1364457216623159.8, -1061985202720179.0),
    (0.0, -0.3, 0.4387912809451864, -0.2397127693021015, 0.9294281531242645, 0.09577139587927731, -0.1837791539821565, -0.16430326623043592),
    (0.0, -0.3, 3.9491215285066774, -2.1574149237189135, -0.044265133292852435, -0.03468294422616985, 0.12150368204099338, 0.022340804656333625),
    (0.0, -0.3, 10.530990742684473, -5.753106463250436, -9.028217031888334e-10, -2.9398529057202886e-09, 1.313518027061532e-08, 1.2867889037715018e-08),
    (0.0, -0.3, 0.3535533905932738, -0.3535533905932738, 0.9260263103056631, 0.12564915826868492, -0.12391691774128952, -0.1247484208638711),
    (0.0, -0.3, 3.181980515339464, -3.181980515339464, -0.07903481293238038, -0.7921711628493813, 1.3429842164955585, 1.1028329431014436),
    (0.0, -0.3, 8.48528137423857, -8.48528137423857, -0.6062883584329994, -0.5078889627838794, 4.707331878288964, -0.41559231152849174),
    (0.0, -0.3, 0.1811788772383368, -0.46601954298361314, 0.9259924302050195, 0.15249149719710764, -0.01686879518371173, -0.09285346705410892),
    (0.0, -0.3, 1.6306098951450312, -4.194175886852518, -28.88081355866705, 4.839677356558248, 11.667492428999692, -63.41077306598522),
    (0.0, -0.3, 4.3482930537200835, -11.184469031606715, 2416261125.024878, -235883631436.32724, 1311750817849.7888, 520810027971.80554),
    (0.0, -0.3, -0.2080734182735712, -0.45464871341284085, 0.8923068055700959, 0.2040251583603413, 0.19797424773846148, -0.169544349492351),
    (0.0, -0.3, -1.8726607644621407, -4.091838420715567, -6.24678724749317, 13.52611568844254, -34.34149768360514, 0.5065774803668547),
    (0.0, -0.3, -4.993762038565708, -10.91156912190818, -8722457358.890642, -2549873646.97266, -8038621365.52939, -54104873630.281204),
    (0.0, -0.3, -0.3535533905932738, -0.3535533905932738, 0.8805641345157651, 0.257830089426598, 0.25719829470197825, -0.2530601696820411),
    (0.0, -0.3, -3.181980515339464, -3.181980515339464, 0.4895529877201829, 0.35848995265848915, -0.15237506945270582, 0.8594374035609107),
    (0.0, -0.3, -8.48528137423857, -8.48528137423857, 0.3382818997764699, 0.40106704390026726, -0.7217925327452199, 2.700212976846357),
    (0.0, -0.3, -0.4520360710085306, -0.2136899401169149, 0.8957499489643211, 0.3251342877199699, 0.2845161770605817, -0.34451893764907787),
    (0.0, -0.3, -4.068324639076775, -1.923209461052234, 3.0494409333676686, -2.465054197725112, -8.579466676682303, 1.1943713243201026),
    (0.0, -0.3, -10.848865704204735, -5.128558562805957, 2320275.077692933, -495046435.25386053, -1311294668.1302583, 2647388660.201361),
    (0.0, 1.2, 0.5, 0.0, 1.3779495024021955, 0.026525326483130055, -0.843695679963244, 1.0903290303491973),
    (0.0, 1.2, 4.5, 0.0, -0.0017010068088213165, 0.0063087416549317404, 0.0022470071555968823, -0.014706449640304712),
    (0.0, 1.2, 12.0, 0.0, -2.30281218023671e-16, 3.6109794868853886e-17, 1.3782868248705544e-15, -2.395563067108505e-16),
    (0.0, 1.2, 0.4387912809451864, 0.2397127693021015, 1.1632439677670106, -0.19217501701783993, -0.4547243750847554, 1.016857757421979),
    (0.0, 1.2, 3.9491215285066774, 2.1574149237189135, -0.029039276028935298, -0.023327560848355695, 0.03467995111408043, 0.06764749134010706),
    (0.0, 1.2, 10.530990742684473, 5.753106463250436, -1.1282536573854643e-09, -1.6163293566794369e-09, 1.3812188990065255e-09, 1.1580141058472136e-08),
    (0.0, 1.2, 0.3535533905932738, 0.3535533905932738, 1.0770507423355509, -0.3193581378787105, -0.2519396243785865, 1.020269312700035),
    (0.0, 1.2, 3.181980515339464, 3.181980515339464, -0.3986622600196456, 0.06051257279403396, 0.643350925628697, 0.4651459125897341),
    (0.0, 1.2, 8.48528137423857, 8.48528137423857, -0.01423526798081698, -0.39106348871152397, -1.5716718841085835, 1.6908325743354389),
    (0.0, 1.2, 0.1811788772383368, 0.46601954298361314, 0.9779979495528128, -0.5130437656657071, 0.032122406371997106, 1.0715660651093515),
    (0.0, 1.2, 1.6306098951450312, 4.194175886852518, -0.9351565163580212, -9.799748742519858, -19.02770987244033, 7.174294216955477),
    (0.0, 1.2, 4.3482930537200835, 11.184469031606715, -63695465112.652855, -48403815524.15659, -136441187539.05913, 454548285909.7963),
    (0.0, 1.2, 4.23921383018445e-32, 0.5, 0.9116748233580197, -0.7113938690487093, 0.28473463329150717, 1.1700977708911715),
    (0.0, 1.2, 3.8152924471660048e-31, 4.5, -4.691262706817195, 22.545079208588902, 49.894810502130795, 16.93305626001165),
    (0.0, 1.2, 1.017411319244268e-30, 12.0, -642551463938977.9, 106248895076954.11, 572883752519451.6, 3866562169451220.5),
    (0.0, 1.2, -0.2080734182735712, 0.45464871341284085, 0.8811612719380671, -0.9952617989844467, 0.5761914538018614, 1.3717150144479826),
    (0.0, 1.2, -1.8726607644621407, 4.091838420715567, 1.9250993837497214, -1.4103177621137912, -0.8448548181227754, -5.756887366199846),
    (0.0, 1.2, -4.993762038565708, 10.91156912190818, 558051670.6897641, -1385925258.9797518, -6176428263.9287195, -6653964633.533646),
    (0.0, 1.2, -0.3535533905932738, 0.3535533905932738, 0.9341225562228731, -1.2831096244897864, 0.7965634367455455, 1.6437081355697025),
    (0.0, 1.2, -3.181980515339464, 3.181980515339464, 0.011427794942988618, -0.5398104842648057, 1.2963023408899152, 0.8512417858636199),
    (0.0, 1.2, -8.48528137423857, 8.48528137423857, -0.1434067780721849, -0.11061161758273567, 1.726169509223557, 0.18583251336285592),
    (0.0, 1.2, -0.4520360710085306, 0.2136899401169149, 1.1043926708652638, -1.5840850754540112, 0.9384986039471734, 2.0211672177195967),
    (0.0, 1.2, -4.068324639076775, 1.923209461052234, 15.687167175987542, -15.267083439500963, -11.274971929988073, 50.758326700166684),
    (0.0, 1.2, -10.848865704204735, 5.128558562805957, 2104404486.8403428, -2051645083.602955, -5829687629.977024, 16729269043.24194),
    (0.0, 1.2, -0.5, 8.4784276603689e-32, 1.5563858731410003, -1.89184057464552, 0.8895524480348473, 2.641493817726005),
    (0.0, 1.2, -4.5, 7.6305848943320095e-31, -234.88015758029297, 98.717058666581, 445.65169503688685, -275.7064934094916),
    (0.0, 1.2, -12.0, 2.034822638488536e-30, 245968796025603.25, 2584487292668687.0, -1719285689017593.8, -1.5265651520750834e+16),
    (0.0, 1.2, 0.4387912809451864, -0.2397127693021015, 1.7333465664837198, 0.20342622992822024, -1.276848166953524, 1.3449798576408067),
    (0.0, 1.2, 3.9491215285066774, -2.1574149237189135, 0.11588789099146386, -0.020599095203634638, -0.21578675191698102, 0.19353970132437295),
    (0.0, 1.2, 10.530990742684473, -5.753106463250436, -1.8863591595876472e-09, 6.218984347405825e-09, -8.407736187253453e-09, -3.863051243719185e-08),
    (0.0, 1.2, 0.3535533905932738, -0.3535533905932738, 2.0202555638280573, 0.2351125236357557, -1.5035363894048317, 1.6265067282443622),
    (0.0, 1.2, 3.181980515339464, -3.181980515339464, 2.0366666532315083, 1.4518817995519395, -6.166382919285101, 1.0587778691489218),
    (0.0, 1.2, 8.48528137423857, -8.48528137423857, 0.7137478482005675, 2.454198232407477, -13.663418408426423, -7.5046568122642245),
    (0.0, 1.2, 0.1811788772383368, -0.46601954298361314, 2.5097449837972508, 0.08254900673945921, -1.6633263039879433, 2.2388100225191403),
    (0.0, 1.2, 1.6306098951450312, -4.194175886852518, 83.55283298077312, -146.37874867150558, 235.6505515366838, 338.6969598981636),
    (0.0, 1.2, 4.3482930537200835, -11.184469031606715, -794811254435.2048, 1173274993263.7878, -4803152828753.051, -7134029257295.041),
    (0.0, 1.2, -0.2080734182735712, -0.45464871341284085, 2.9827938566633536, -1.0364154679351416, -0.8331615498884345, 3.4131075772852406),
    (0.0, 1.2, -1.8726607644621407, -4.091838420715567, -146.4134948486336, -264.0059279086085, 408.4247824949239, -459.0189774679528),
    (0.0, 1.2, -4.993762038565708, -10.91156912190818, 118759615826.46954, 138826338343.5149, -465957897723.75226, 976799121170.2461),
    (0.0, 1.2, -0.3535533905932738, -0.3535533905932738, 2.7035077825185634, -1.588677103311568, -0.13706318708657902, 3.4856502569260988),
    (0.0, 1.2, -3.181980515339464, -3.181980515339464, -13.599377443680135, 5.192043959964772, -28.345054203159386, -29.24072090533558),
    (0.0, 1.2, -8.48528137423857, -8.48528137423857, 0.19534643453057107, -18.29674057912608, 59.185172230027135, -71.29758713144845),
    (0.0, 1.2, -0.4520360710085306, -0.2136899401169149, 2.216580699009843, -1.8971072395731396, 0.45297478791369933, 3.23452654632904),
    (0.0, 1.2, -4.068324639076775, -1.923209461052234, 73.10749150250373, -10.437191622405217, -131.07390228856823, -46.82782922526069),
    (0.0, 1.2, -10.848865704204735, -5.128558562805957, -7268250960.65227, -4691769533.811532, 26778911370.729225, 43124378170.39738),
    (0.0, -2.5, 0.5, 0.0, 2.6333866751357995, -1.5570088682472716, -4.486139317453782, -1.5473955235253822),
    (0.0, -2.5, 4.5, 0.0, -0.005594385907927211, 0.004617153606424488, 0.015291171264296504, -0.007718418055922921),
    (0.0, -2.5, 12.0, 0.0, 2.364970742262553e-16, 1.4674109685803113e-17, -1.4167736488769808e-15, -1.3700332353836418e-16),
    (0.0, -2.5, 0.4387912809451864, 0.2397127693021015, 3.3006738810730645, -2.8064051195553663, -6.762460729553586, -1.090754936479414),
    (0.0, -2.5, 3.9491215285066774, 2.1574149237189135, -0.07109744481575887, -0.22149946271906173, -0.17666147121677744, 0.5996951114186199),
    (0.0, -2.5, 10.530990742684473, 5.753106463250436, 4.865696318446055e-09, 1.1527340130295535e-08, 9.124730792463888e-09, -7.670396964663279e-08),
    (0.0, -2.5, 0.3535533905932738, 0.3535533905932738, 4.086058197485879, -3.5723834266742065, -8.549245915989447, -1.3018419823452645),
    (0.0, -2.5, 3.181980515339464, 3.181980515339464, -6.083308220163574, -3.02518762871835, 5.838325709265825, 17.738456641834187),
    (0.0, -2.5, 8.48528137423857, 8.48528137423857, -1.249707806152547, 6.9537515451168055, 35.99774752887742, -25.01857776939721),
    (0.0, -2.5, 0.1811788772383368, 0.46601954298361314, 6.039132551190306, -4.333145866411763, -11.504744608626767, -3.022615481290977),
    (0.0, -2.5, 1.6306098951450312, 4.194175886852518, 412.404200480512, -602.8076582557433, -1934.9182004157863, -192.5041563493512),
    (0.0, -2.5, 4.3482930537200835, 11.184469031606715, 4241048324218.8027, 5112920068587.113, 18960018497634.027, -36144119871909.586),
    (0.0, -2.5, 4.23921383018445e-32, 0.5, 8.456729662954547, -3.9096810624627154, -13.37937446980951, -6.513444722983759),
    (0.0, -2.5, 3.8152924471660048e-31, 4.5, -5659.823429425746, 3695.5472216989992, 11787.303204214153, 11117.186050037326),
    (0.0, -2.5, 1.017411319244268e-30, 12.0, 2.133618351881728e+17, 1.6954121770372346e+16, 5.7051382823513944e+16, -1.2845243175520187e+18),
    (0.0, -2.5, -0.2080734182735712, 0.45464871341284085, 10.76757517885447, -1.4115176259203415, -12.536305148082622, -11.865616496406275),
    (0.0, -2.5, -1.8726607644621407, 4.091838420715567, 3653.4092641185866, 976.9181340789721, 2901.3639488280955, -6330.914458141631),
    (0.0, -2.5, -4.993762038565708, 10.91156912190818, -1447388089541.9626, 1965252005168.1228, 7216976342760.193, 12297386349071.74),
    (0.0, -2.5, -0.3535533905932738, 0.3535533905932738, 10.970074123610424, 1.6589806013859607, -8.969589936123752, -15.144142577831442),
    (0.0, -2.5, -3.181980515339464, 3.181980515339464, 184.3210541477978, 458.75641817359093, 251.46904660355165, 561.5983458592339),
    (0.0, -2.5, -8.48528137423857, 8.48528137423857, -59.86928867802952, -378.4379944535533, -1298.2819022749886, -1579.48298129695),
    (0.0, -2.5, -0.4520360710085306, 0.2136899401169149, 9.454496973568151, 4.128936136695247, -4.467687676297328, -15.779425408484096),
    (0.0, -2.5, -4.068324639076775, 1.923209461052234, 749.0573868636816, 1319.2714537974948, -1580.44944852318, -1596.9748960501254),
    (0.0, -2.5, -10.848865704204735, 5.128558562805957, 42983846627.362915, -165391921110.66895, 172321328341.73734, 972841799133.0448),
    (0.0, -2.5, -0.5, 8.4784276603689e-32, 6.433951609705098, 5.279755465794373, -0.0006756367590506196, -13.322071423164719),
    (0.0, -2.5, -4.5, 7.6305848943320095e-31, -257.97499795554063, -2408.873301353337, -963.3824177481507, 5260.859807804433),
    (0.0, -2.5, -12.0, 2.034822638488536e-30, 1.6947224756333168e+16, 2.2774001926679236e+16, -9.547229156090397e+16, -1.3841311653785482e+17),
    (0.0, -2.5, 0.4387912809451864, -0.2397127693021015, 2.386691913422575, -0.5460043820469681, -2.9606090484635175, -2.2944043855224194),
    (0.0, -2.5, 3.9491215285066774, -2.1574149237189135, 0.0181331961537106, 0.011868031250401123, -0.038252179263016196, -0.011242256525177945),
    (0.0, -2.5, 10.530990742684473, -5.753106463250436, 5.289915908927578e-10, -8.985648790380271e-10, -3.1620863598770225e-10, 6.066417214541006e-09),
    (0.0, -2.5, 0.3535533905932738, -0.3535533905932738, 2.320496886161337, -0.03259751209707418, -2.250529049158976, -2.7474350807120835),
    (0.0, -2.5, 3.181980515339464, -3.181980515339464, 0.015628167607684148, 0.15245780192497996, -0.18705464136718514, -0.16289703819632506),
    (0.0, -2.5, 8.48528137423857, -8.48528137423857, -0.005014657280518041, -0.141557754161673, 0.5997245505834514, 0.5589941133032131),
    (0.0, -2.5, 0.1811788772383368, -0.46601954298361314, 2.2767462064563815, 0.7082608024232041, -1.2811552320672057, -3.4651003230052466),
    (0.0, -2.5, 1.6306098951450312, -4.194175886852518, 1.8651665078718287, -0.3140843701891498, 0.24794610408512455, 3.63333902879597),
    (0.0, -2.5, 4.3482930537200835, -11.184469031606715, 12476886785.791151, -11025623773.87604, 36176062690.571594, 90622220559.32242),
    (0.0, -2.5, -0.2080734182735712, -0.45464871341284085, 2.5069599046823305, 2.465296503244673, 0.6650115314073213, -5.589844037191291),
    (0.0, -2.5, -1.8726607644621407, -4.091838420715567, 0.03524701708298523, -0.12494787678618449, 0.4815599516854671, -0.21794381091973075),
    (0.0, -2.5, -4.993762038565708, -10.91156912190818, -50676336.146937415, -96984762.9249945, 401779591.5163027, -541216665.0609646),
    (0.0, -2.5, -0.3535533905932738, -0.3535533905932738, 3.007376528463926, 3.500247948787709, 1.4167356283851233, -7.2984686161718315),
    (0.0, -2.5, -3.181980515339464, -3.181980515339464, -2.0786678136074115, 0.5322785802790302, 4.908555047076691, 3.3055462593452463),
    (0.0, -2.5, -8.48528137423857, -8.48528137423857, 0.05300929562309407, -0.9109348011045115, -4.306091862838927, 3.7299829300628247),
    (0.0, -2.5, -0.4520360710085306, -0.2136899401169149, 4.036460755080389, 4.541468902402738, 1.6063646993009346, -9.65391919308693),
    (0.0, -2.5, -4.068324639076775, -1.923209461052234, -46.972331607332265, 110.46814612832688, 267.763859918962, -165.48841559497063),
    (0.0, -2.5, -10.848865704204735, -5.128558562805957, -18008030080.45186, -1018110513.1064782, 95177610897.52126, 55724258610.31149),
    (0.5, 0.7, 0.5, 0.0, 1.0051138392787433, -0.3030438005333027, 0.1709676415353242, 0.8459758531166539),
    (0.5, 0.7, 4.5, 0.0, 0.006758447111359567, 0.01187504634770284, -0.01634771087416091, -0.02443901331666875),
    (0.5, 0.7, 12.0, 0.0, -1.352148454317721e-16, 7.941301698724054e-16, 7.593911501129286e-16, -4.739914694869641e-15),
    (0.5, 0.7, 0.4387912809451864, 0.2397127693021015, 0.815990472497824, -0.28830841742036606, 0.3141017439633686, 0.6113259513356115),
    (0.5, 0.7, 3.9491215285066774, 2.1574149237189135, -0.09661659916721135, -0.016561887846310266, 0.15793614168696868, 0.12529087006790296),
    (0.5, 0.7, 10.530990742684473, 5.753106463250436, -8.721156299782952e-09, 2.733904789812657e-10, 4.613650914285876e-08, 2.338900279185402e-08),
    (0.5, 0.7, 0.3535533905932738, 0.3535533905932738, 0.7202148482182615, -0.2947801869868787, 0.417754838050738, 0.5214590800568124),
    (0.5, 0.7, 3.181980515339464, 3.181980515339464, -1.0788088302813201, 0.58119069338705, 2.409668019581397, 0.863292998549429),
    (0.5, 0.7, 8.48528137423857, 8.48528137423857, -1.5455115460461128, -1.2679750158146619, 1.0830741714136471, 11.827877951130512),
    (0.5, 0.7, 0.1811788772383368, 0.46601954298361314, 0.5796603317928596, -0.32162017867390874, 0.5787615912071682, 0.44155052570406356),
    (0.5, 0.7, 1.6306098951450312, 4.194175886852518, -7.840599262586767, -36.92261189909138, -74.44078392829213, 39.79376786649881),
    (0.5, 0.7, 4.3482930537200835, 11.184469031606715, -504404499325.51587, -6131886154.851319, 1027011808271.0942, 2842674929818.3057),
    (0.5, 0.7, 4.23921383018445e-32, 0.5, 0.4471998784619385, -0.377083961797558, 0.7196965363908372, 0.4112654305473382),
    (0.5, 0.7, 3.8152924471660048e-31, 4.5, -29.01775539609108, 105.56159456473394, 245.70890868869446, 85.10922312375381),
    (0.5, 0.7, 1.017411319244268e-30, 12.0, -4046701607883586.5, 2869149488428086.0, 1.709965088970592e+16, 2.4617934284616692e+16),
    (0.5, 0.7, -0.2080734182735712, 0.45464871341284085, 0.2997390730514003, -0.4989434213475675, 0.8768242518529182, 0.4043815256788801),
    (0.5, 0.7, -1.8726607644621407, 4.091838420715567, 13.125330941072448, -5.308986411487443, 1.6771140209912228, -34.461715084627905),
    (0.5, 0.7, -4.993762038565708, 10.91156912190818, 1988678507.9927897, -13994971805.041033, -72189421515.96445, -46411297469.25806),
    (0.5, 0.7, -0.3535533905932738, 0.3535533905932738, 0.20396134689580964, -0.6546050605366265, 1.0178135302737443, 0.4170562561433125),
    (0.5, 0.7, -3.181980515339464, 3.181980515339464, 0.19780811845855728, 0.20408355791505817, 1.2603737235774692, 0.3848889660540676),
    (0.5, 0.7, -8.48528137423857, 8.48528137423857, 0.21580535718484659, 0.5918954301823742, 3.866526021801582, 1.7631626211744122),
    (0.5, 0.7, -0.4520360710085306, 0.2136899401169149, 0.15789559038621342, -0.8508895422245567, 1.1747823689121049, 0.46254607484862065),
    (0.5, 0.7, -4.068324639076775, 1.923209461052234, 2.711445090044536, -4.056465207807457, 0.270838345715143, 10.881940030872117),
    (0.5, 0.7, -10.848865704204735, 5.128558562805957, 329916700.2791827, -197099910.09451807, -1234174863.399906, 1933789839.6692474),
    (0.5, 0.7, -0.5, 8.4784276603689e-32, 0.211079005381009, -1.1496446368119255, 1.3908148381430423, 0.6146409762768791),
    (0.5, 0.7, -4.5, 7.6305848943320095e-31, -29.526791474952407, 36.736007028791285, 47.53101754061658, -75.04194526068557),
    (0.5, 0.7, -12.0, 2.034822638488536e-30, 24501320408364.72, 271563464993809.44, -160203718175169.06, -1593433978533273.0),
    (0.5, 0.7, 0.4387912809451864, -0.2397127693021015, 1.2379301873781168, -0.4019822317913856, 0.1369114375759938, 1.1904492493318612),
    (0.5, 0.7, 3.9491215285066774, -2.1574149237189135, 0.0703530704094712, -0.18420868372994276, 0.09496781656632607, 0.44837816687122106),
    (0.5, 0.7, 10.530990742684473, -5.753106463250436, 1.6390290786844705e-08, 6.330893134526146e-09, -1.0482163302458164e-07, 1.5026072459267602e-08),
    (0.5, 0.7, 0.3535533905932738, -0.3535533905932738, 1.3715010231696134, -0.5329175737912721, 0.21575333435776828, 1.4217051934815943),
    (0.5, 0.7, 3.181980515339464, -3.181980515339464, 3.1497869807258914, -1.900686683468877, -1.7235440153916313, 8.66155723576316),
    (0.5, 0.7, 8.48528137423857, -8.48528137423857, 5.6393704683941985, -2.057377596950906, -15.117048298168624, 33.075224561828904),
    (0.5, 0.7, 0.1811788772383368, -0.46601954298361314, 1.4862089559465297, -0.8429430973645955, 0.513940610112185, 1.7096323653113874),
    (0.5, 0.7, 1.6306098951450312, -4.194175886852518, -149.2231412740672, -137.3637781187051, 446.5328750182054, -211.88339932370948),
    (0.5, 0.7, 4.3482930537200835, -11.184469031606715, 2564880975840.74, 864580231063.9585, -10563100595659.705, 12584368395705.613),
    (0.5, 0.7, -0.2080734182735712, -0.45464871341284085, 1.100163350458708, -1.4831793249750767, 1.3654935872968845, 1.56678763144242),
    (0.5, 0.7, -1.8726607644621407, -4.091838420715567, -184.8051231521458, 141.00299813331085, -430.6649258769401, -280.82953861050976),
    (0.5, 0.7, -4.993762038565708, -10.91156912190818, 45295642310.905075, -227992538948.2303, 1356899842203.108, -305383007745.1773),
    (0.5, 0.7, -0.3535533905932738, -0.3535533905932738, 0.7457069019253055, -1.5388925584165316, 1.5482837138429686, 1.234006196720742),
    (0.5, 0.7, -3.181980515339464, -3.181980515339464, 5.7126490500878955, 9.565108357607125, -8.666244908513713, 21.102314022904793),
    (0.5, 0.7, -8.48528137423857, -8.48528137423857, -11.41671452944599, 13.827818540462193, -107.18481907295994, 10.139295111482026),
    (0.5, 0.7, -0.4520360710085306, -0.2136899401169149, 0.4432958215781722, -1.4271619848355817, 1.5489981037304625, 0.9132422789194654),
    (0.5, 0.7, -4.068324639076775, -1.923209461052234, 6.053338951938452, -7.6593329155535805, -19.483742997950355, 7.641391816429879),
    (0.5, 0.7, -10.848865704204735, -5.128558562805957, -680197928.2284676, -248906834.811838, 2955639605.280331, 3061064516.7646675),
    (-1.5, 0.2, 0.5, 0.0, 0.6788018967633651, 0.06121882126263951, -0.7644770775336239, -0.012291531007005297),
    (-1.5, 0.2, 4.5, 0.0, 0.0005809192188747647, 0.00019099688472296253, -0.0014892805641029694, -0.0004652100500782162),
    (-1.5, 0.2, 12.0, 0.0, 4.836209456734309e-18, 2.640066567884328e-18, -2.9654643751770057e-17, -1.6086480975561302e-17),
    (-1.5, 0.2, 0.4387912809451864, 0.2397127693021015, 0.70707605751601, -0.1286154470623431, -0.7720922662433647, 0.1713470795444497),
    (-1.5, 0.2, 3.9491215285066774, 2.1574149237189135, -0.00047656082749900894, 0.005896423510051873, 0.006466417117775142, -0.01279395128462017),
    (-1.5, 0.2, 10.530990742684473, 5.753106463250436, 4.9142006126573806e-11, 5.969804360868058e-11, -9.63648230052727e-11, -4.582260780291416e-10),
    (-1.5, 0.2, 0.3535533905932738, 0.3535533905932738, 0.7487193852300708, -0.23728034548678967, -0.800293091684902, 0.277328272022558),
    (-1.5, 0.2, 3.181980515339464, 3.181980515339464, 0.0817116522702931, 0.03798974366707567, -0.09741239148333793, -0.17979805908072616),
    (-1.5, 0.2, 8.48528137423857, 8.48528137423857, 0.010594273389316738, 0.01767980570217741, 0.02748215675701088, -0.12029501728036446),
    (-1.5, 0.2, 0.1811788772383368, 0.46601954298361314, 0.8540905720555791, -0.392601857593049, -0.8798666071993357, 0.4327588989203606),
    (-1.5, 0.2, 1.6306098951450312, 4.194175886852518, 0.5302829793083103, 3.703624558509054, 5.9863936627347325, -4.416968825083091),
    (-1.5, 0.2, 4.3482930537200835, 11.184469031606715, 5737855682.2792845, -2987418396.0975347, -28992312382.9491, -24787065286.07831),
    (-1.5, 0.2, 4.23921383018445e-32, 0.5, 1.0077103975836672, -0.514638798061106, -1.0040645052924286, 0.5671409389262768),
    (-1.5, 0.2, 3.8152924471660048e-31, 4.5, -6.60620978780627, -11.807629201359168, -22.224214296089702, 11.539406779487116),
    (-1.5, 0.2, 1.017411319244268e-30, 12.0, -22041935488248.71, -73521877242139.56, -432154453055011.56, 128185574498718.89),
    (-1.5, 0.2, -0.2080734182735712, 0.45464871341284085, 1.2681750954629492, -0.593893006995974, -1.2368532909279735, 0.6862158557261064),
    (-1.5, 0.2, -1.8726607644621407, 4.091838420715567, 1.007910041147368, 1.8920150322787392, 3.860494973521554, 0.012034176765186628),
    (-1.5, 0.2, -4.993762038565708, 10.91156912190818, 247428977.091873, -105396042.82519877, 71216891.57377578, -1593970309.303947),
    (-1.5, 0.2, -0.3535533905932738, 0.3535533905932738, 1.5372852008995308, -0.556466483656854, -1.5082093017138032, 0.696962499394397),
    (-1.5, 0.2, -3.181980515339464, 3.181980515339464, 4.5018873565853506, 2.697583104188345, -11.660110036950858, 2.614481494773421),
    (-1.5, 0.2, -8.48528137423857, 8.48528137423857, 5.840374199770454, 6.2338132040567436, -51.22539553782325, -1.9050784540580679),
    (-1.5, 0.2, -0.4520360710085306, 0.2136899401169149, 1.7886607984290355, -0.38874458085698826, -1.7908126479580602, 0.5666410089009563),
    (-1.5, 0.2, -4.068324639076775, 1.923209461052234, -38.42890812708252, 133.0543529316182, -43.74916076872314, -323.16100086117405),
    (-1.5, 0.2, -10.848865704204735, 5.128558562805957, -74034862937.84485, 19327183963.529007, 355412081123.6157, -295336552314.552),
    (-1.5, 0.2, -0.5, 8.4784276603689e-32, 1.9621168140131044, 0.0013841808483853, -2.0185936283548305, 0.18350635726133846),
    (-1.5, 0.2, -4.5, 7.6305848943320095e-31, 917.712077923976, -276.3705124087704, -2157.8534845449008, 694.2305847224153),
    (-1.5, 0.2, -12.0, 2.034822638488536e-30, 3.796073048797727e+16, -2.0179047628263316e+16, -2.2901623401458374e+17, 1.2255117463924166e+17),
    (-1.5, 0.2, 0.4387912809451864, -0.2397127693021015, 0.7026348306539187, 0.2568536014731517, -0.8097629111674909, -0.1962424590349669),
    (-1.5, 0.2, 3.9491215285066774, -2.1574149237189135, 0.003637751881678021, -0.006018309082372661, -0.0023158715771071795, 0.017277501546304582),
    (-1.5, 0.2, 10.530990742684473, -5.753106463250436, 9.339414280785572e-11, 1.0782062873664433e-11, -5.332444947104637e-10, 2.0657778854902274e-10),
    (-1.5, 0.2, 0.3535533905932738, -0.3535533905932738, 0.7458803050351457, 0.37328805835130996, -0.8645390050522024, -0.3006131282763852),
    (-1.5, 0.2, 3.181980515339464, -3.181980515339464, 0.11706839476529196, 0.02048018700935659, -0.24805269343210756, 0.12832035500132824),
    (-1.5, 0.2, 8.48528137423857, -8.48528137423857, 0.028043544793376857, -0.0010332923182215148, -0.11751230955405077, 0.12137185984961432),
    (-1.5, 0.2, 0.1811788772383368, -0.46601954298361314, 0.86441137505183, 0.5412757913654721, -0.9928744864692098, -0.4429459129645739),
    (-1.5, 0.2, 1.6306098951450312, -4.194175886852518, 3.834002145457444, -4.3974170992917285, 4.004398532429371, 11.43286682493491),
    (-1.5, 0.2, 4.3482930537200835, -11.184469031606715, 1049021810.8122718, 10360585601.350107, -59136214707.9478, -17428544159.57108),
    (-1.5, 0.2, -0.2080734182735712, -0.45464871341284085, 1.3394831808893237, 0.72460731494402, -1.4471861427000823, -0.5804393861513117),
    (-1.5, 0.2, -1.8726607644621407, -4.091838420715567, 3.964392821033422, -2.265867446603159, 7.648237829746353, 5.3943790510799525),
    (-1.5, 0.2, -4.993762038565708, -10.91156912190818, 106292632.63798946, 591682415.4693227, -2886603802.6944575, 2067351924.3837914),
    (-1.5, 0.2, -0.3535533905932738, -0.3535533905932738, 1.623823141386436, 0.6433350400232961, -1.7189468520498201, -0.4908846241024281),
    (-1.5, 0.2, -3.181980515339464, -3.181980515339464, 3.2320666802194586, -6.572033199751778, -14.326335213392019, 5.641650625300156),
    (-1.5, 0.2, -8.48528137423857, -8.48528137423857, -2.5521578311679014, -11.409976002613739, -36.613653772504634, 59.4372154608619),
    (-1.5, 0.2, -0.4520360710085306, -0.2136899401169149, 1.8575638772692158, 0.42468140578666924, -1.943349584351809, -0.26090652086502386),
    (-1.5, 0.2, -4.068324639076775, -1.923209461052234, -125.85035062857123, -107.04645142152887, 173.15403265319233, 336.11502940956757),
    (-1.5, 0.2, -10.848865704204735, -5.128558562805957, -68529173878.69824, 60325524034.15868, 526526285412.1288, -155613183579.403),
    (3.0, 0.0, 0.5, 0.0, -1.2916929613685293, 0.0, -1.7907561509881882, 0.0),
    (3.0, 0.0, 4.5, 0.0, 0.49134416005858106, 0.0, -0.7399832941945056, 0.0),
    (3.0, 0.0, 12.0, 0.0, 3.924632628772119e-13, 0.0, -2.2552720478458225e-12, 0.0),
    (3.0, 0.0, 0.4387912809451864, 0.2397127693021015, -1.292578492065222, -0.5074663906088159, -2.250308048254972, 1.0074355217412554),
    (3.0, 0.0, 3.9491215285066774, 2.1574149237189135, -4.772820607190118, -2.709553695654648, 2.6728583468928893, 10.788981191507162),
    (3.0, 0.0, 10.530990742684473, 5.753106463250436, -5.350081544925258e-06, 2.9289708189542576e-06, 3.5782714670615585e-05, 1.2704611926854409e-06),
    (3.0, 0.0, 0.3535533905932738, 0.3535533905932738, -1.2075324493815096, -0.8986046871070125, -2.8926868148182416, 1.3082295493821778),
    (3.0, 0.0, 3.181980515339464, 3.181980515339464, -76.93494697077581, -50.665861875664504, -16.299727117749296, 221.03101704839847),
    (3.0, 0.0, 8.48528137423857, 8.48528137423857, -1026.9749280907056, -1390.1807425918005, -1969.0163400191884, 10196.867345059336),
    (3.0, 0.0, 0.1811788772383368, 0.46601954298361314, -0.750174090348058, -1.491591660584025, -3.9745206410346863, 0.9969640548867428),
    (3.0, 0.0, 1.6306098951450312, 4.194175886852518, 4088.7559824513733, 1133.5225437468653, 494.3532212156396, -11696.58300018286),
    (3.0, 0.0, 4.3482930537200835, 11.184469031606715, -165285862184242.4, -569511632814404.5, -2971772681538944.0, 2150917630461728.8),
    (3.0, 0.0, 4.23921383018445e-32, 0.5, -1.87555753471596e-31, -1.7298034957415216, -4.4243050948773535, 2.6123837082896484e-31),
    (3.0, 0.0, 3.8152924471660048e-31, 4.5, -1.803190987372513e-26, -16529.17910743399, -47262.195817044674, 5.399825220173452e-26),
    (3.0, 0.0, 1.017411319244268e-30, 12.0, -4.833259315484019e-11, -7.605012449111205e+18, -4.750546041766234e+19, 3.0562831707439935e-10),
    (3.0, 0.0, -0.2080734182735712, 0.45464871341284085, 0.8433086172212407, -1.418917460075361, -3.838567109348594, -1.101841317268703),
    (3.0, 0.0, -1.8726607644621407, 4.091838420715567, -2622.235581828322, -824.5845106690689, -4041.3193985410817, 6306.701512189178),
    (3.0, 0.0, -4.993762038565708, 10.91156912190818, -6975471684597.492, 28185055469579.996, 143436275767246.47, 107170045619790.72),
    (3.0, 0.0, -0.3535533905932738, 0.3535533905932738, 1.2075324493815096, -0.8986046871070125, -2.8926868148182416, -1.3082295493821778),
    (3.0, 0.0, -3.181980515339464, 3.181980515339464, 76.93494697077581, -50.665861875664504, -16.299727117749296, -221.03101704839847),
    (3.0, 0.0, -8.48528137423857, 8.48528137423857, 1026.9749280907056, -1390.1807425918005, -1969.0163400191884, -10196.867345059336),
    (3.0, 0.0, -0.4520360710085306, 0.2136899401169149, 1.2967428914253516, -0.43752106110080957, -2.149756042553513, -0.9109373356450666),
    (3.0, 0.0, -4.068324639076775, 1.923209461052234, 2.6031846621294528, -2.1048785897401956, 0.9293370101307744, -6.426083306452795),
    (3.0, 0.0, -10.848865704204735, 5.128558562805957, -4.54324812646575e-08, -1.9840506872451502e-07, -7.667847892980598e-07, -9.097214627757823e-07),
    (3.0, 0.0, -0.5, 8.4784276603689e-32, 1.2916929613685293, -1.5182796483514e-31, -1.7907561509881882, -3.7645868330024467e-31),
    (3.0, 0.0, -4.5, 7.6305848943320095e-31, -0.49134416005858106, -5.646505346738634e-31, -0.7399832941945056, -5.858192696345716e-31),
    (3.0, 0.0, -12.0, 2.034822638488536e-30, -3.924632628772119e-13, -4.58907861890708e-42, -2.2552720478458225e-12, -2.595427679252292e-41),
    (3.0, 0.0, 0.4387912809451864, -0.2397127693021015, -1.292578492065222, 0.5074663906088159, -2.250308048254972, -1.0074355217412554),
    (3.0, 0.0, 3.9491215285066774, -2.1574149237189135, -4.772820607190118, 2.709553695654648, 2.6728583468928893, -10.788981191507162),
    (3.0, 0.0, 10.530990742684473, -5.753106463250436, -5.350081544925258e-06, -2.9289708189542576e-06, 3.5782714670615585e-05, -1.2704611926854409e-06),
    (3.0, 0.0, 0.3535533905932738, -0.3535533905932738, -1.2075324493815096, 0.8986046871070125, -2.8926868148182416, -1.3082295493821778),
    (3.0, 0.0, 3.181980515339464, -3.181980515339464, -76.93494697077581, 50.665861875664504, -16.299727117749296, -221.03101704839847),
    (3.0, 0.0, 8.48528137423857, -8.48528137423857, -1026.9749280907056, 1390.1807425918005, -1969.0163400191884, -10196.867345059336),
    (3.0, 0.0, 0.1811788772383368, -0.46601954298361314, -0.750174090348058, 1.491591660584025, -3.9745206410346863, -0.9969640548867428),
    (3.0, 0.0, 1.6306098951450312, -4.194175886852518, 4088.7559824513733, -1133.5225437468653, 494.3532212156396, 11696.58300018286),
    (3.0, 0.0, 4.3482930537200835, -11.184469031606715, -165285862184242.4, 569511632814404.5, -2971772681538944.0, -2150917630461728.8),
    (3.0, 0.0, -0.2080734182735712, -0.45464871341284085, 0.8433086172212407, 1.418917460075361, -3.838567109348594, 1.101841317268703),
    (3.0, 0.0, -1.8726607644621407, -4.091838420715567, -2622.235581828322, 824.5845106690689, -4041.3193985410817, -6306.701512189178),
    (3.0, 0.0, -4.993762038565708, -10.91156912190818, -6975471684597.492, -28185055469579.996, 143436275767246.47, -107170045619790.72),
    (3.0, 0.0, -0.3535533905932738, -0.3535533905932738, 1.2075324493815096, 0.8986046871070125, -2.8926868148182416, 1.3082295493821778),
    (3.0, 0.0, -3.181980515339464, -3.181980515339464, 76.93494697077581, 50.665861875664504, -16.299727117749296, 221.03101704839847),
    (3.0, 0.0, -8.48528137423857, -8.48528137423857, 1026.9749280907056, 1390.1807425918005, -1969.0163400191884, 10196.867345059336),
    (3.0, 0.0, -0.4520360710085306, -0.2136899401169149, 1.2967428914253516, 0.43752106110080957, -2.149756042553513, 0.9109373356450666),
    (3.0, 0.0, -4.068324639076775, -1.923209461052234, 2.6031846621294528, 2.1048785897401956, 0.9293370101307744, 6.426083306452795),
    (3.0, 0.0, -10.848865704204735, -5.128558562805957, -4.54324812646575e-08, 1.9840506872451502e-07, -7.667847892980598e-07, 9.097214627757823e-07),
    (0.0, 5.0, 0.5, 0.0, -12.077798023663059, 11.870562850454894, -1.200959904489116, -37.65256609320234),
    (0.0, 5.0, 4.5, 0.0, 0.0012503291916485164, 0.010601298356057574, -0.013567530902916526, -0.02462712427323552),
    (0.0, 5.0, 12.0, 0.0, 2.5070565569516713e-16, -3.0686681340875715e-17, -1.4950505652340187e-15, 2.8806461878831714e-16),
    (0.0, 5.0, 0.4387912809451864, 0.2397127693021015, -4.122500443569836, 11.848285518787431, -13.227085969416194, -24.373562476256886),
    (0.0, 5.0, 3.9491215285066774, 2.1574149237189135, -0.009411788008502803, 0.0023454517257719856, 0.01550231656379799, -0.005134192189904862),
    (0.0, 5.0, 10.530990742684473, 5.753106463250436, 1.8992089121389899e-10, 2.483022692382922e-10, -3.432022720527469e-10, -1.733159663384819e-09),
    (0.0, 5.0, 0.3535533905932738, 0.3535533905932738, -0.31153242365861744, 11.810819328183628, -18.921714779630936, -17.97772723615148),
    (0.0, 5.0, 3.181980515339464, 3.181980515339464, -0.002816009937197317, 0.026898084654428844, 0.010564540932918762, -0.019117402771078804),
    (0.0, 5.0, 8.48528137423857, 8.48528137423857, 0.0020706179108612253, 0.01997445207784119, 0.07043432409216337, -0.08683700236839578),
    (0.0, 5.0, 0.1811788772383368, 0.46601954298361314, 5.20510713696294, 11.537827810798605, -26.78414113605715, -8.36996121691905),
    (0.0, 5.0, 1.6306098951450312, 4.194175886852518, -0.04616039650683895, -0.02533945068127945, -0.07589939832041921, 0.09605737883207474),
    (0.0, 5.0, 4.3482930537200835, 11.184469031606715, 653393080.7016551, 448508535.2924055, 1285539512.5437431, -4352538578.7191),
    (0.0, 5.0, 4.23921383018445e-32, 0.5, 10.938283903804503, 11.15908396441477, -34.80616570314657, 1.789038780290763),
    (0.0, 5.0, 3.8152924471660048e-31, 4.5, 0.0068136428775289115, 0.035430113366590396, 0.08067414537413153, -0.002274398246405632),
    (0.0, 5.0, 1.017411319244268e-30, 12.0, 1513730339808.7034, -238420403626.18976, -800508968062.709, -9204718671960.494),
    (0.0, 5.0, -0.2080734182735712, 0.45464871341284085, 19.99115093589355, 11.28913023898354, -48.75647075682878, 16.743246632699954),
    (0.0, 5.0, -1.8726607644621407, 4.091838420715567, -0.09920364818052761, -0.12959334075684686, 0.5054968486207136, -0.05077332484352434),
    (0.0, 5.0, -4.993762038565708, 10.91156912190818, -309145.1386402678, 632286.7743917027, 2677898.7670818386, 3552165.3648299826),
    (0.0, 5.0, -0.3535533905932738, 0.3535533905932738, 30.867621958480992, 13.825967961147908, -69.5683634360284, 31.0248551696388),
    (0.0, 5.0, -3.181980515339464, 3.181980515339464, -15.818945277701124, 11.112266508811475, 8.01129695675718, -60.93617185023033),
    (0.0, 5.0, -8.48528137423857, 8.48528137423857, 0.7290601804557284, -8.974585020280648, 37.85683812503817, 43.50007734826052),
    (0.0, 5.0, -0.4520360710085306, 0.2136899401169149, 44.278859657939286, 22.316073016693544, -104.13251974063463, 40.31504447269973),
    (0.0, 5.0, -4.068324639076775, 1.923209461052234, -1917.6464530275798, -813.9597360154822, 6142.72018948401, -1606.0486065653688),
    (0.0, 5.0, -10.848865704204735, 5.128558562805957, 402220556480.4293, 44645035136.63197, -2359769060584.4263, 945525509953.4946),
    (0.0, 5.0, -0.5, 8.4784276603689e-32, 57.73082566319705, 49.58737172537301, -169.54577352753196, 20.99178617649136),
    (0.0, 5.0, -4.5, 7.6305848943320095e-31, 36790.08375058555, 96753.91691126155, -193386.1139800994, -184363.3464618184),
    (0.0, 5.0, -12.0, 2.034822638488536e-30, -1.4508734585470474e+18, 1.2337478454873792e+18, 8.081329798275487e+18, -7.933425223492155e+18),
    (0.0, 5.0, 0.4387912809451864, -0.2397127693021015, -23.97737465342831, 13.550478808930995, 14.059673646422947, -60.12542131258113),
    (0.0, 5.0, 3.9491215285066774, -2.1574149237189135, 0.8911886986423079, -0.27219888477204945, -1.6896585336282393, 2.3339264265907604),
    (0.0, 5.0, 10.530990742684473, -5.753106463250436, 1.6876986697259773e-08, -4.153119753588664e-08, 4.188214884237389e-08, 2.8138394055269265e-07),
    (0.0, 5.0, 0.3535533905932738, -0.3535533905932738, -33.52146368685434, 17.55887965545479, 21.76655220129126, -82.24822332632),
    (0.0, 5.0, 3.181980515339464, -3.181980515339464, 40.583160830351616, 23.56386942714688, -143.55175559664747, 39.19438397176465),
    (0.0, 5.0, 8.48528137423857, -8.48528137423857, -9.239743118119478, -49.08689305124098, 264.15254756129957, 180.3131156547306),
    (0.0, 5.0, 0.1811788772383368, -0.46601954298361314, -48.92857578547105, 33.391078656002705, 18.261610922796674, -132.016368285372),
    (0.0, 5.0, 1.6306098951450312, -4.194175886852518, 3354.127266572251, -10641.566992838847, 21808.158286319554, 26192.40608509758),
    (0.0, 5.0, 4.3482930537200835, -11.184469031606715, 77734195564997.66, -100100996138908.34, 377425273293711.06, 702389489686193.8),
    (0.0, 5.0, -0.2080734182735712, -0.45464871341284085, -31.480476667691615, 99.48469546301048, -118.24716723225632, -201.3142321200279),
    (0.0, 5.0, -1.8726607644621407, -4.091838420715567, -337647.2736093932, 15200.124357093227, 108771.2274176017, -642783.4614258375),
    (0.0, 5.0, -4.993762038565708, -10.91156912190818, -240670911662644.53, -252108654607501.28, 826244351150696.1, -1801775921342570.2),
    (0.0, 5.0, -0.3535533905932738, -0.3535533905932738, 9.470879092372087, 109.30119374625295, -195.33993033771853, -148.14198154017208),
    (0.0, 5.0, -3.181980515339464, -3.181980515339464, 93830.64777024629, 128956.76673659639, -150134.88610145464, 10523.530876855497),
    (0.0, 5.0, -8.48528137423857, -8.48528137423857, 39490.17090289485, 132134.65569282332, -568722.3865588703, 474692.34363095276),
    (0.0, 5.0, -0.4520360710085306, -0.2136899401169149, 44.74867239854613, 90.42645478143116, -217.0178106549585, -61.915889441841415),
    (0.0, 5.0, -4.068324639076775, -1.923209461052234, 128997.13170217312, -155285.6387560926, -129545.36917705422, 309889.7937415645),
    (0.0, 5.0, -10.848865704204735, -5.128558562805957, 659615115555.197, -36151984609789.07, -83187873866962.7, 185295271865987.8),
];
