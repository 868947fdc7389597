#ifndef GLAISHER_CONSTANTS_HPP
#define GLAISHER_CONSTANTS_HPP

#include <string>

#include "glaisher/bigreal.hpp"
#include "glaisher/errors.hpp"

namespace glaisher {

// Reference literals, 1105 decimal digits each (~3670 bits). Validated at test
// time against independent computations: pi against a Gauss-Legendre AGM
// iteration, the Euler-Mascheroni constant against the mpfr library value, and
// ln(2*pi) against ln(pi) + ln(2) recomputed at the requested precision.
inline constexpr prec_t kConstantTableBits = 3600;

namespace detail {

inline const char* pi_digits() {
    static const std::string s =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421"
    "170679821480865132823066470938446095505822317253594081284811174502841027019385211055596446229489"
    "549303819644288109756659334461284756482337867831652712019091456485669234603486104543266482133936"
    "072602491412737245870066063155881748815209209628292540917153643678925903600113305305488204665213"
    "841469519415116094330572703657595919530921861173819326117931051185480744623799627495673518857527"
    "248912279381830119491298336733624406566430860213949463952247371907021798609437027705392171762931"
    "767523846748184676694051320005681271452635608277857713427577896091736371787214684409012249534301"
    "465495853710507922796892589235420199561121290219608640344181598136297747713099605187072113499999"
    "983729780499510597317328160963185950244594553469083026425223082533446850352619311881710100031378"
    "387528865875332083814206171776691473035982534904287554687311595628638823537875937519577818577805"
    "321712268066130019278766111959092164201989380952572010654858632788659361533818279682303019520353"
    "01852968995773622599413891249721775283479131515575";
    return s.c_str();
}

inline const char* euler_gamma_digits() {
    static const std::string s =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917"
    "467495146314472498070824809605040144865428362241739976449235362535003337429373377376739427925952"
    "582470949160087352039481656708532331517766115286211995015079847937450857057400299213547861466940"
    "296043254215190587755352673313992540129674205137541395491116851028079842348775872050384310939973"
    "613725530608893312676001724795378367592713515772261027349291394079843010341777177808815495706610"
    "750101619166334015227893586796549725203621287922655595366962817638879272680132431010476505963703"
    "947394957638906572967929601009015125195950922243501409349871228247949747195646976318506676129063"
    "811051824197444867836380861749455169892792301877391072945781554316005002182844096053772434203285"
    "478367015177394398700302370339518328690001558193988042707411542227819716523011073565833967348717"
    "650491941812300040654693142999297779569303100503086303418569803231083691640025892970890985486825"
    "777364288253954925873629596133298574739302373438847070370284412920166417850248733379080562754998"
    "434590761643167103146710722370021810745044418664759";
    return s.c_str();
}

inline const char* ln_2pi_digits() {
    static const std::string s =
    "1.8378770664093454835606594728112352797227949472755668256343030809655313918545207953894865972719"
    "083952440112932492686748927337257636815871443117518304453627872071214850947173380927918119827616"
    "112603264697461892547492510365033899089548201917187027839632231962611480106953907721299179844624"
    "279113855486999422005670391966389850627885412925913729488231249524260974736305689987586887646607"
    "970258953093145638634759757061713788462725643079461672052950585309829800787111999992074126943705"
    "144047152430700687247592054316975009722719076849626583582485399922753679280302789575459100202066"
    "417683936712388159514332525411750507649724518605059042160990362403936104519600917610771497670658"
    "882278136156555534754445076266765187901482804052386787426337408944137118915686982655208159082601"
    "536796094035051774961877174911446465066877848938559655749937054225161751623317487505801769689661"
    "835077881525919088198969357960783242618144657028735729075124759420708690852634755752923440722283"
    "452753593767913238054014882609582282799976925761217812723574091548090088859200013721780671774949"
    "24161775959043856937286573853455451085829016615619";
    return s.c_str();
}

inline void check_table_limit(prec_t bits) {
    if (bits > kConstantTableBits)
        throw precision_error("constant table holds 1105 digits", bits);
}

// Parse once at full table precision; per-call results are roundings of that.
inline const BigReal& full_precision_literal(int which) {
    static const BigReal pi = BigReal::parse(pi_digits(), kConstantTableBits);
    static const BigReal gamma = BigReal::parse(euler_gamma_digits(), kConstantTableBits);
    static const BigReal l2p = BigReal::parse(ln_2pi_digits(), kConstantTableBits);
    return which == 0 ? pi : (which == 1 ? gamma : l2p);
}

} // namespace detail

inline BigReal const_pi(prec_t bits) {
    detail::check_table_limit(bits);
    return detail::full_precision_literal(0).rounded_to(clamp_precision(bits));
}

inline BigReal const_euler_gamma(prec_t bits) {
    detail::check_table_limit(bits);
    return detail::full_precision_literal(1).rounded_to(clamp_precision(bits));
}

inline BigReal const_ln_2pi(prec_t bits) {
    detail::check_table_limit(bits);
    return detail::full_precision_literal(2).rounded_to(clamp_precision(bits));
}

inline BigReal const_ln2(prec_t bits) {
    BigReal r(clamp_precision(bits));
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

// The scalar constants every module pulls from.
struct FundamentalConstants {
    BigReal pi;
    BigReal euler_gamma;
    BigReal ln_2pi;

    static FundamentalConstants at(prec_t bits) {
        return FundamentalConstants{const_pi(bits), const_euler_gamma(bits),
                                    const_ln_2pi(bits)};
    }
};

} // namespace glaisher

#endif
