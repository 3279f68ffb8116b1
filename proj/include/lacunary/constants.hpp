#pragma once

// Embedded decimal expansions of the rotation constants, 1160 fractional
// digits each. The digit text was generated with mpmath (dps = 1200) and
// independently cross-checked against MPFR (via gmpy2, 4100-bit) and sympy
// evaluations; the SHA-256 of each "i.fff..." text is pinned below and
// re-verified by the build's test suite. Digits are data, not computed at
// runtime.

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lacunary {

struct ConstantEntry {
    std::string_view name;
    std::string_view text;      // "i.fff..." with 1160 fractional digits
    std::string_view sha256;    // hex digest of text
};

namespace detail {

inline constexpr std::string_view k_pi_text =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628"
    "6208998628034825342117067982148086513282306647093844609550582231725359408128"
    "4811174502841027019385211055596446229489549303819644288109756659334461284756"
    "4823378678316527120190914564856692346034861045432664821339360726024914127372"
    "4587006606315588174881520920962829254091715364367892590360011330530548820466"
    "5213841469519415116094330572703657595919530921861173819326117931051185480744"
    "6237996274956735188575272489122793818301194912983367336244065664308602139494"
    "6395224737190702179860943702770539217176293176752384674818467669405132000568"
    "1271452635608277857713427577896091736371787214684409012249534301465495853710"
    "5079227968925892354201995611212902196086403441815981362977477130996051870721"
    "1349999998372978049951059731732816096318595024459455346908302642522308253344"
    "6850352619311881710100031378387528865875332083814206171776691473035982534904"
    "2875546873115956286388235378759375195778185778053217122680661300192787661119"
    "5909216420198938095257201065485863278865936153381827968230301952035301852968"
    "9957736225994138912497217752834791315155748572424541506959508295331168617278"
    "5588907509838175463746";
inline constexpr std::string_view k_pi_sha256 = "f293801eec07c1630794f538cc23fd0057165be6109351a19a881571b658633a";

inline constexpr std::string_view k_e_text =
    "2.71828182845904523536028747135266249775724709369995957496696762772407663035"
    "3547594571382178525166427427466391932003059921817413596629043572900334295260"
    "5956307381323286279434907632338298807531952510190115738341879307021540891499"
    "3488416750924476146066808226480016847741185374234544243710753907774499206955"
    "1702761838606261331384583000752044933826560297606737113200709328709127443747"
    "0472306969772093101416928368190255151086574637721112523897844250569536967707"
    "8544996996794686445490598793163688923009879312773617821542499922957635148220"
    "8269895193668033182528869398496465105820939239829488793320362509443117301238"
    "1970684161403970198376793206832823764648042953118023287825098194558153017567"
    "1736133206981125099618188159304169035159888851934580727386673858942287922849"
    "9892086805825749279610484198444363463244968487560233624827041978623209002160"
    "9902353043699418491463140934317381436405462531520961836908887070167683964243"
    "7814059271456354906130310720851038375051011574770417189861068739696552126715"
    "4688957035035402123407849819334321068170121005627880235193033224745015853904"
    "7304199577770935036604169973297250886876966403555707162268447162560798826517"
    "8713419512466520103059";
inline constexpr std::string_view k_e_sha256 = "a64d1b64923150c612f3354197d953daa6f08496de529186451b5b4722ed1fc8";

inline constexpr std::string_view k_sqrt2_text =
    "1.41421356237309504880168872420969807856967187537694807317667973799073247846"
    "2107038850387534327641572735013846230912297024924836055850737212644121497099"
    "9358314132226659275055927557999505011527820605714701095599716059702745345968"
    "6201472851741864088919860955232923048430871432145083976260362799525140798968"
    "7253396546331808829640620615258352395054745750287759961729835575220337531857"
    "0113543746034084988471603868999706990048150305440277903164542478230684929369"
    "1862158057846311159666871301301561856898723723528850926486124949771542183342"
    "0428568606014682472077143585487415565706967765372022648544701585880162075847"
    "4922657226002085584466521458398893944370926591800311388246468157082630100594"
    "8587040031864803421948972782906410450726368813137398552561173220402450912277"
    "0022694112757362728049573810896750401836986836845072579936472906076299694138"
    "0475654823728997180326802474420629269124859052181004459842150591120249441341"
    "7285314781058036033710773091828693147101711116839165817268894197587165821521"
    "2822951848847208969463386289156288276595263514054226765323969461751129160240"
    "8715510135150455381287560052631468017127402653969470240300517495318862925631"
    "3851881634780015693691";
inline constexpr std::string_view k_sqrt2_sha256 = "8fe4d91f695b630b06403914827b0d1ae7567b47877f9a4545022d7cdc4d204e";

inline constexpr std::string_view k_gamma_text =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677"
    "7664670936947063291746749514631447249807082480960504014486542836224173997644"
    "9235362535003337429373377376739427925952582470949160087352039481656708532331"
    "5177661152862119950150798479374508570574002992135478614669402960432542151905"
    "8775535267331399254012967420513754139549111685102807984234877587205038431093"
    "9973613725530608893312676001724795378367592713515772261027349291394079843010"
    "3417771778088154957066107501016191663340152278935867965497252036212879226555"
    "9536696281763887927268013243101047650596370394739495763890657296792960100901"
    "5125195950922243501409349871228247949747195646976318506676129063811051824197"
    "4448678363808617494551698927923018773910729457815543160050021828440960537724"
    "3420328547836701517739439870030237033951832869000155819398804270741154222781"
    "9716523011073565833967348717650491941812300040654693142999297779569303100503"
    "0863034185698032310836916400258929708909854868257773642882539549258736295961"
    "3329857473930237343884707037028441292016641785024873337908056275499843459076"
    "1643167103146710722370021810745044418664759134803669025532458625442225345181"
    "3879124345735013612977";
inline constexpr std::string_view k_gamma_sha256 = "4f2952851be238adcd6b2e996a8e6d029559e4599fae01bee9796525d5a53a64";

inline constexpr std::string_view k_zeta3_text =
    "1.20205690315959428539973816151144999076498629234049888179227155534183820578"
    "6313090186455873609335258146199157795260719418491995998673283213776396837207"
    "9001614539417829493600667191915755222424942439615639096641032911590957809655"
    "1465127991840510571525598801543710978110203982753256678760352233698494166181"
    "1057014715778639499737523785277937030956025701853182790003076547107563048843"
    "3208697115737423807934450316076253177145354444118311781822497185263570918244"
    "8998796203508335756172022603393785870328131267807990054177348691152537065623"
    "7057440966221712902627320732361492242913040528555372341033077577798064242024"
    "3048828152100091460265382206962715520208227433500101529480119869011762595167"
    "6366998171835575234880703719555742347294083595208861666202572853755813079282"
    "5864872821737055661968989526620187768106292008177923381358768284264124324314"
    "8028217367450672069350762689530434593937503296636377575062473323992348288310"
    "7733905276802007579843567937115050900502736604711400853350343646722485653151"
    "8117766181092227919102248839680026660656870519062759738773535744447877537916"
    "4142738132256957319602018748847471046993365661400806930325618537188600727185"
    "3594828847886245041855";
inline constexpr std::string_view k_zeta3_sha256 = "65e413dcd47678e8fea579ca950742ff2be443cbe525ff9e38e5799b51d694c7";

}  // namespace detail

inline const std::vector<ConstantEntry>& constant_table() {
    static const std::vector<ConstantEntry> table = {
        {"pi", detail::k_pi_text, detail::k_pi_sha256},
        {"e", detail::k_e_text, detail::k_e_sha256},
        {"sqrt2", detail::k_sqrt2_text, detail::k_sqrt2_sha256},
        {"gamma", detail::k_gamma_text, detail::k_gamma_sha256},
        {"zeta3", detail::k_zeta3_text, detail::k_zeta3_sha256},
    };
    return table;
}

inline const ConstantEntry& constant_entry(std::string_view name) {
    for (const auto& e : constant_table())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

}  // namespace lacunary
