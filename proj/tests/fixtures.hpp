#pragma once

// Regression fixtures: five input/output scenarios with independently known
// generalized inverses, in the matrix-file format. Expected matrices are
// transcribed verbatim from the published reference outputs; tests compare
// structurally after normalization, so the written form of each cell does not
// matter.
namespace fixtures {

// --- Scenario 1: constant 6x4 input with a 6x6 left helper; the result is a
// {1,2,4}-inverse of rank 4.
inline constexpr const char* kIntA =
    "6 4\n"
    "-1; 0; 1; 2\n"
    "-1; 3; 0; -1\n"
    "10; -1; 1; 3\n"
    "0; 1; -1; -3\n"
    "1; -1; 0; 1\n"
    "1; 0; -1; -2\n";

inline constexpr const char* kIntR =
    "6 6\n"
    "3; -1; 3; 1; 2; -1\n"
    "0; -1; 0; 0; -2; 1\n"
    "3; 1; -3; 1; 2; -1\n"
    "0; -1; 0; 0; -2; 1\n"
    "3; 1; 3; -1; 2; -1\n"
    "0; -1; 0; 0; -2; 1\n";

inline constexpr const char* kIntX124 =
    "4 6\n"
    "-1/10; 0; 1/10; 0; -1/10; 0\n"
    "1; 1/2; 0; 1/2; 1; 1/2\n"
    "-13/10; -1; 3/10; -1; -43/10; -1\n"
    "11/10; 1/2; -1/10; 1/2; 21/10; 1/2\n";

// --- Scenario 2: 4x3 polynomial input of rank 3 with a 4x2 left helper of
// rank 2; the result is a {2,4}-inverse of rank 2.
inline constexpr const char* kPolyA43 =
    "4 3\n"
    "x+1; x; 5\n"
    "x+2; x; 3\n"
    "x-1; x; 1\n"
    "x+3; x; 2\n";

inline constexpr const char* kPolyR42 =
    "4 2\n"
    "x+1; 2\n"
    "x+1; 2\n"
    "x+1; 3\n"
    "x+1; 3\n";

inline constexpr const char* kPolyX24 =
    "3 4\n"
    "(-21-30*x+4*x^2)/(49+140*x+204*x^2); (-21-30*x+4*x^2)/(49+140*x+204*x^2); "
    "(56+80*x-4*x^2)/(49+140*x+204*x^2); (56+80*x-4*x^2)/(49+140*x+204*x^2)\n"
    "(-2*x*(17+2*x))/(49+140*x+204*x^2); (-2*x*(17+2*x))/(49+140*x+204*x^2); "
    "(2*x*(43+2*x))/(49+140*x+204*x^2); (2*x*(43+2*x))/(49+140*x+204*x^2)\n"
    "(14+34*x+40*x^2)/(49+140*x+204*x^2); (14+34*x+40*x^2)/(49+140*x+204*x^2); "
    "-(21+44*x+40*x^2)/(49+140*x+204*x^2); -(21+44*x+40*x^2)/(49+140*x+204*x^2)\n";

// --- Scenario 3: 4x6 polynomial input with a 5x6 right helper; the result is
// a {1,2,3}-inverse. Entry (2,3) is sign-corrected relative to its original
// source: the uncorrected value fails all four Penrose equations, while this
// form verifies exactly as a {1,2,3}-inverse (see the refutation test).
inline constexpr const char* kPolyA46 =
    "4 6\n"
    "1+x; x; 5; 2+x; x; 3\n"
    "-1+x; x; 1; 3+x; x; 2\n"
    "-2+x; x; 1; 3+x; x; 2\n"
    "-3+x; -1+x; 1; 1+x; x; 1\n";

inline constexpr const char* kPolyT56 =
    "5 6\n"
    "1+x; 2; 2+x; 1; -1+x; 3\n"
    "2+x; 3; 3+x; 1; -2+x; 2\n"
    "3+x; 3; 3+x; -1; -2+x; 1\n"
    "2+x; 3; 3+x; 4; -1+x; 1\n"
    "2+x; 3; 3+x; -1; -1+x; 1\n";

inline constexpr const char* kPolyX123 =
    "6 4\n"
    "0; 1; -1; 0\n"
    "(5031-13465*x+14101*x^2-130*x^3-975*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-70434+89855*x-4908*x^2+18453*x^3+6615*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(75465-82542*x-12803*x^2-22101*x^3-6180*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-25155+20168*x+11555*x^2+4153*x^3+540*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4)\n"
    "(5031-11455*x+7726*x^2+5905*x^3+975*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-70434+90587*x+28674*x^2-3784*x^3-1695*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(75465-85296*x-45272*x^2-4707*x^3+540*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-25155+22250*x+19052*x^2+4011*x^3+180*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4)\n"
    "-(5031-15463*x+15407*x^2+8530*x^3+975*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-50310+38335*x+81884*x^2+21697*x^3+735*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(75465-86214*x-56095*x^2+1091*x^3+2780*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-35217+49192*x+543*x^2-12483*x^3-2540*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4)\n"
    "(-12+3071*x-13389*x^2+4760*x^3+1950*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-96960+246044*x+119747*x^2-42630*x^3-15150*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(106974-261537*x-153182*x^2+21230*x^3+11200*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-29838+61289*x+78394*x^2+22290*x^3+2000*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4)\n"
    "(5031-17461*x+16713*x^2+17190*x^3+2925*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "-(-140868+87781*x+221884*x^2+111187*x^3+15885*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "(-166023+97482*x+251041*x^2+118599*x^3+16220*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4); "
    "-(-65403+39808*x+75665*x^2+28527*x^3+3260*x^4)/(30186-78744*x+63024*x^2+49340*x^3+7800*x^4)\n";

// --- Scenario 4: 6x3 polynomial input with a 6x5 left helper; the result is
// a {1,2,4}-inverse.
inline constexpr const char* kPolyA63 =
    "6 3\n"
    "x+1; x; 5\n"
    "x+2; x; 3\n"
    "x-1; x; 1\n"
    "x+3; x; 2\n"
    "x-2; x; 1\n"
    "x+3; x; 2\n";

inline constexpr const char* kPolyR65 =
    "6 5\n"
    "1+x; 2; 2+x; 1; -1+x\n"
    "2+x; 3; 3+x; 1; -2+x\n"
    "3+x; 3; 3+x; -1; -2+x\n"
    "2+x; 3; 3+x; 4; -1+x\n"
    "2+x; 3; 3+x; -1; -1+x\n"
    "1+x; 2; 2+x; 1; -1+x\n";

inline constexpr const char* kPolyX124Tall =
    "3 6\n"
    "(1596-2292*x+2542*x^2)/(-41601+39942*x-27634*x^2); "
    "(-5593+2166*x+4766*x^2)/(83202-79884*x+55268*x^2); "
    "(2310-5520*x+1282*x^2)/(-41601+39942*x-27634*x^2); "
    "(13573-13626*x+7944*x^2)/(41601-39942*x+27634*x^2); "
    "(10549-4878*x+7922*x^2)/(-83202+79884*x-55268*x^2); "
    "(1596-2292*x+2542*x^2)/(-41601+39942*x-27634*x^2)\n"
    "(23961-36414*x+38983*x^2-5084*x^3)/(-83202*x+79884*x^2-55268*x^3); "
    "(-38171+3108*x+76654*x^2-9532*x^3)/(4*x*(41601-39942*x+27634*x^2)); "
    "(60564-14028*x+34011*x^2+2564*x^3)/(83202*x-79884*x^2+55268*x^3); "
    "(74774-105294*x+62993*x^2-15888*x^3)/(83202*x-79884*x^2+55268*x^3); "
    "(29743-69888*x-4194*x^2+15844*x^3)/(166404*x-159768*x^2+110536*x^3); "
    "(23961-36414*x+38983*x^2-5084*x^3)/(-83202*x+79884*x^2-55268*x^3)\n"
    "(16905-21399*x+20869*x^2)/(83202-79884*x+55268*x^2); "
    "(-7*(-5257+1862*x+4414*x^2))/(4*(41601-39942*x+27634*x^2)); "
    "(18228+3465*x+14261*x^2)/(-83202+79884*x-55268*x^2); "
    "(-7*(5446-5735*x+2597*x^2))/(83202-79884*x+55268*x^2); "
    "(8281+25270*x+12302*x^2)/(166404-159768*x+110536*x^2); "
    "(16905-21399*x+20869*x^2)/(83202-79884*x+55268*x^2)\n";

// --- Scenario 5: the 4x3 input of scenario 2 with a 2x3 right helper; the
// result is a {2,3}-inverse of rank 2.
inline constexpr const char* kPolyT23 =
    "2 3\n"
    "x+1; 2; x-1\n"
    "x+2; 1; x-1\n";

inline constexpr const char* kPolyX23 =
    "3 4\n"
    "-(41-139*x+88*x^2+25*x^3+x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "(30-99*x+83*x^2+31*x^3+3*x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "-(55-239*x+222*x^2+97*x^3+9*x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "(85-290*x+228*x^2+82*x^3+7*x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4)\n"
    "(-136+69*x+207*x^2+35*x^3+x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "-(69-170*x+40*x^2+26*x^3+3*x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "(-38+3*x+373*x^2+117*x^3+9*x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "-(31-254*x+246*x^2+82*x^3+7*x^4)/(329-1168*x+984*x^2+380*x^3+35*x^4)\n"
    "(59-148*x+79*x^2+10*x^3)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "(13-41*x+23*x^2+5*x^3)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "(31-122*x+71*x^2+20*x^3)/(329-1168*x+984*x^2+380*x^3+35*x^4); "
    "(-18*(-1+x)^2)/(329-1168*x+984*x^2+380*x^3+35*x^4)\n";

}  // namespace fixtures
