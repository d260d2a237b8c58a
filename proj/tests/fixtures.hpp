#ifndef HYMIN_TEST_FIXTURES_HPP
#define HYMIN_TEST_FIXTURES_HPP

#include "textio.hpp"

namespace hymin::fixtures {

// sextic model of a modular curve with four simple double points; a known
// instance that is non-minimal at 2 and minimal at 7
inline Form modular_sextic() {
    return parse_form(
        "5*x0^6 - 50*x0^5*x1 + 206*x0^4*x1^2 - 408*x0^3*x1^3 + 321*x0^2*x1^4 + 10*x0*x1^5"
        " - 100*x1^6 + 9*x0^4*x2^2 - 60*x0^3*x1*x2^2 + 80*x0^2*x1^2*x2^2 + 48*x0*x1^3*x2^2"
        " + 15*x1^4*x2^2 + 3*x0^2*x2^4 - 10*x0*x1*x2^4 + 6*x1^2*x2^4 - x2^6",
        3);
}

// its minimized and reduced model (reference values for the invariants)
inline Form modular_sextic_reduced() {
    return parse_form(
        "-x0^6 - 2*x0^5*x1 + 2*x0^5*x2 + 23*x0^4*x1*x2 - 5*x0^3*x1^3 - x0^3*x1^2*x2"
        " + x0^3*x1*x2^2 + 5*x0^3*x2^3 - x0^2*x1^4 - 8*x0^2*x1^3*x2 + 17*x0^2*x1^2*x2^2"
        " - 8*x0^2*x1*x2^3 - x0^2*x2^4 + 3*x0*x1^5 - 7*x0*x1^4*x2 + 10*x0*x1^3*x2^2"
        " - 10*x0*x1^2*x2^3 + 7*x0*x1*x2^4 - 3*x0*x2^5 + x1^6 - 3*x1^5*x2 + 3*x1^4*x2^2"
        " - 6*x1^3*x2^3 + 3*x1^2*x2^4 - 3*x1*x2^5 + x2^6",
        3);
}

// the 42-digit cubic surface (variables x, y, z, w -> x0..x3)
inline Form s0_form() {
    return parse_form(
        "-866812507957452012700721792086587937*x0^3"
        "+3728812982147606773738081898305547310*x0^2*x1"
        "+64283763770985952786436023327908284160*x0^2*x2"
        "+497718355086466637590632151750449246396*x0^2*x3"
        "-22244579889188354084172896622822533100*x0*x1^2"
        "-431923319964698868982551682351317273600*x0*x1*x2"
        "-2446192338737080630831681553231971375920*x0*x1*x3"
        "-1618017788538827453488905618589376819200*x0*x2^2"
        "+15747155527321974660280650027255501486080*x0*x2*x3"
        "-66025203088832123300929566152845689479856*x0*x3^2"
        "-65456138728936479908688098323552023000*x1^3"
        "-357488525368202205779029272883004032000*x1^2*x2"
        "+20762944510278587277812066653228558975600*x1^2*x3"
        "+20013727944438057575668128606471875584000*x1*x2^2"
        "+64721500464867439337111893187712691097600*x1*x2*x3"
        "-351425459041632833836477745377146122692640*x1*x3^2"
        "+5759206855635558085134656966457081856000*x2^3"
        "-406645509553946606042771346800156046540800*x2^2*x3"
        "-3284853297122243046122373374040607648010240*x2*x3^2"
        "-2681060506817531405431579495959221739841728*x3^3",
        4);
}

} // namespace hymin::fixtures

#endif
