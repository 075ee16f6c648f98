#pragma once

#include <array>
#include <string_view>

namespace drops::tables {

struct Row {
    std::string_view lhs;
    std::string_view rhs;
};

// Trilinear LISA components in Cartesian products Iabc = I1a I2b I3c (three spins).
inline constexpr std::array<Row, 27> trilinear_to_cartesian{{
    {"T[1,-1]{1,2,3}(t1)", "(2)/(sqrt(15)) [ 3Ixxx -3i Iyyy -i (Ixxy+Ixyx+Iyxx) + (Ixyy+Iyxy+Iyyx) +(Ixzz+Izxz+Izzx) -i (Iyzz+Izyz+Izzy)]"},
    {"T[1,0]{1,2,3}(t1)", "((sqrt(8))/(sqrt(15))) [(Ixxz+Ixzx+Izxx)+(Iyyz+Iyzy+Izyy)+3 Izzz]"},
    {"T[1,1]{1,2,3}(t1)", "-(2)/(sqrt(15)) [ i (Ixxy+Ixyx+Iyxx) +(Ixyy+Iyxy+Iyyx) +(Ixzz+Izxz+Izzx) +i (Iyzz+ Izyz+Izzy) +3Ixxx+3i Iyyy ]"},
    {"T[3,-3]{1,2,3}(t1)", "[ (Ixxx+i Iyyy)-i (Ixxy+Ixyx+Iyxx)-(Ixyy+Iyxy+Iyyx) ]"},
    {"T[3,-2]{1,2,3}(t1)", "((sqrt(2))/(sqrt(3))) [ (Ixxz+ Ixzx+ Izxx)-(Iyyz+Iyzy+Izyy) -i (Ixyz+Ixzy+Iyxz+Iyzx+Izxy+Izyx)]"},
    {"T[3,-1]{1,2,3}(t1)", "(1)/(sqrt(15))[ -3(Ixxx- i Iyyy) +i (Ixxy+Ixyx+Iyxx) -(Ixyy+Iyxy+Iyyx) +4(Ixzz+ Izxz+Izzx) -4 i (Iyzz+ Izyz+ Izzy) ]"},
    {"T[3,0]{1,2,3}(t1)", "-(2)/(sqrt(5)) [ (Ixxz+Ixzx+Izxx)+(Iyyz+Iyzy+Izyy)-2 Izzz ]"},
    {"T[3,1]{1,2,3}(t1)", "(1)/(sqrt(15))[ 3(Ixxx+i Iyyy) +i (Ixxy+Ixyx+Iyxx) +(Ixyy+Iyxy+Iyyx) -4(Ixzz+ Izxz+ Izzx) -4i (Iyzz+Izyz+Izzy) ]"},
    {"T[3,2]{1,2,3}(t1)", "((sqrt(2))/(sqrt(3))) [ (Ixxz+ Ixzx+ Izxx)-(Iyyz+Iyzy+Izyy)+i (Ixyz +Ixzy+Iyxz+Iyzx+Izxy+Izyx)]"},
    {"T[3,3]{1,2,3}(t1)", "[ (-Ixxx+i Iyyy)-i (Ixxy+Ixyx+Iyxx)+(Ixyy+Iyxy+Iyyx)]"},
    {"T[1,-1]{1,2,3}(t2)", "(1)/(sqrt(3))[-i (Iyxx+Ixyx-2Ixxy)-i (Iyzz+ Izyz-2Izzy)+(Ixyy+ Iyxy-2 Iyyx)+(Ixzz+Izxz-2 Izzx)]"},
    {"T[1,0]{1,2,3}(t2)", "((sqrt(2))/(sqrt(3))) [-2(Ixxz+Iyyz)+(Izxx+Ixzx)+(Izyy+Iyzy)]"},
    {"T[1,1]{1,2,3}(t2)", "(1)/(sqrt(3))[(-Ixyy-Iyxy+2 Iyyx)+(-Ixzz -Izxz+2 Izzx)+i (-Iyxx-Ixyx +2Ixxy)+i (-Iyzz- Izyz+2 Izzy)]"},
    {"T[2,-2]{1,2,3}(t2)", "(1)/(sqrt(3))[(Iyzx+Izyx)+(Ixzy+Izxy)-2(Ixyz+Iyxz) -(2 i Ixxz -i Ixzx-i Izxx)+(2 i Iyyz-i Iyzy-i Izyy)]"},
    {"T[2,-1]{1,2,3}(t2)", "(1)/(sqrt(3))[-(2 Ixxy-Ixyx-Iyxx)-i (2 Iyyx-Iyxy-Ixyy)+(2i Izzx -i Izxz-i Ixzz)+(2 Izzy-Izyz-Iyzz)]"},
    {"T[2,0]{1,2,3}(t2)", "sqrt(2) [(Iyzx+Izyx)-(Ixzy+Izxy)]"},
    {"T[2,1]{1,2,3}(t2)", "(1)/(sqrt(3))[ (2 Ixxy-Ixyx-Iyxx)-(2 Izzy-Izyz-Iyzz)+i (2Izzx -Izxz-Ixzz)-i (2Iyyx-Iyxy-Ixyy) ]"},
    {"T[2,2]{1,2,3}(t2)", "(1)/(sqrt(3))[ -(2 Ixyz-Ixzy-Izxy)-(2 Iyxz-Iyzx-Izyx) +i (2Ixxz-Ixzx-Izxx)-i (2Iyyz-Iyzy-Izyy) ]"},
    {"T[1,-1]{1,2,3}(t3)", "[(Ixyy-Iyxy)+(Ixzz-Izxz)-i (Iyxx-Ixyx)-i (Iyzz- Izyz)]"},
    {"T[1,0]{1,2,3}(t3)", "sqrt(2) [(Izxx-Ixzx)+(Izyy-Iyzy)]"},
    {"T[1,1]{1,2,3}(t3)", "-[(Ixyy-Iyxy)+(Ixzz-Izxz)+i (Iyxx- Ixyx)+i (Iyzz- Izyz)]"},
    {"T[2,-2]{1,2,3}(t3)", "[(Izxy-Ixzy)+(Izyx-Iyzx)+i (Izxx-Ixzx)+i (Iyzy-Izyy)]"},
    {"T[2,-1]{1,2,3}(t3)", "[(Iyxx-Ixyx)+i (Ixyy-Iyxy)+i (Izxz-Ixzz)+(Izyz-Iyzz)]"},
    {"T[2,0]{1,2,3}(t3)", "((sqrt(2))/(sqrt(3))) [-(2 Ixyz+Ixzy-Izxy)+ (2Iyxz+Iyzx-Izyx)]"},
    {"T[2,1]{1,2,3}(t3)", "[(Ixyx-Iyxx)+ (Iyzz- Izyz)+i (Ixyy-Iyxy)+i (Izxz-Ixzz)]"},
    {"T[2,2]{1,2,3}(t3)", "[ (Izxy-Ixzy)+(Izyx-Iyzx)+i (Ixzx-Izxx)+i (Izyy-Iyzy)]"},
    {"T[0,0]{1,2,3}(t4)", "(2)/(sqrt(3)) [(Ixyz-Ixzy-Iyxz+Iyzx+Izxy-Izyx)]"},
}};

// 4 Iabc in LISA components (three spins).
inline constexpr std::array<Row, 27> cartesian_to_trilinear{{
    {"Ixxx", "(1)/(10) [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] -sqrt(15) [T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] +5[T[3,-3]{1,2,3}(t1)-T[3,3]{1,2,3}(t1)] ]"},
    {"Ixxy", "(1)/(30) [ 2 i sqrt(15) [T[1,-1]{1,2,3}(t1)+ T[1,1]{1,2,3}(t1)] -i sqrt(15) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] +15 i [T[3,-3]{1,2,3}(t1)+T[3,3]{1,2,3}(t1)] -10 i sqrt(3) [T[1,-1]{1,2,3}(t2)+T[1,1]{1,2,3}(t2)] -10 sqrt(3) [T[2,-1]{1,2,3}(t2)-T[2,1]{1,2,3}(t2)] ]"},
    {"Ixxz", "((sqrt(2))/(sqrt(15))) T[1,0]{1,2,3}(t1) -(1)/(sqrt(5))T[3,0]{1,2,3}(t1) +(1)/(sqrt(6))[T[3,-2]{1,2,3}(t1)+T[3,2]{1,2,3}(t1)] -((sqrt(2))/(sqrt(3)))T[1,0]{1,2,3}(t2) +(i)/(sqrt(3))[T[2,-2]{1,2,3}(t2)- T[2,2]{1,2,3}(t2)]"},
    {"Ixyx", "(1)/(30) [ 2 i sqrt(15) [T[1,-1]{1,2,3}(t1)+T[1,1]{1,2,3}(t1)] -i sqrt(15) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] +15 i [T[3,-3]{1,2,3}(t1)+T[3,3]{1,2,3}(t1)] +5 i sqrt(3) [T[1,-1]{1,2,3}(t2)+T[1,1]{1,2,3}(t2)] +5 sqrt(3) [T[2,-1]{1,2,3}(t2)-T[2,1]{1,2,3}(t2)] -15 i [T[1,-1]{1,2,3}(t3)+T[1,1]{1,2,3}(t3)] -15 [T[2,-1]{1,2,3}(t3)-T[2,1]{1,2,3}(t3)] ]"},
    {"Ixyy", "(1)/(30) [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] -sqrt(15) [T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] -15 [T[3,-3]{1,2,3}(t1)-T[3,3]{1,2,3}(t1)] +5 sqrt(3) [T[1,-1]{1,2,3}(t2)-T[1,1]{1,2,3}(t2)] -5 i sqrt(3) [T[2,-1]{1,2,3}(t2)+T[2,1]{1,2,3}(t2)] +15 [T[1,-1]{1,2,3}(t3)-T[1,1]{1,2,3}(t3)] -15 i [T[2,-1]{1,2,3}(t3)+T[2,1]{1,2,3}(t3)] ]"},
    {"Ixyz", "(1)/(2sqrt(3))[ i sqrt(2) [T[3,-2]{1,2,3}(t1)-T[3,2]{1,2,3}(t1)] -2 sqrt(2) T[2,0]{1,2,3}(t3) -2 [T[2,-2]{1,2,3}(t2)+T[2,2]{1,2,3}(t2)] +2 T[0,0]{1,2,3}(t4)]"},
    {"Ixzx", "(1)/(30) [ 2 sqrt(30) [T[1,0]{1,2,3}(t1)] -6 sqrt(5) [T[3,0]{1,2,3}(t1)] +5 sqrt(6)[T[3,-2]{1,2,3}(t1)+T[3,2]{1,2,3}(t1)] +5 sqrt(6) T[1,0]{1,2,3}(t2) -5 i sqrt(3) [T[2,-2]{1,2,3}(t2)-T[2,2]{1,2,3}(t2)] -15 sqrt(2)T[1,0]{1,2,3}(t3) +15 i [T[2,-2]{1,2,3}(t3)-T[2,2]{1,2,3}(t3)] ]"},
    {"Ixzy", "(1)/(6) [ i sqrt(6)[T[3,-2]{1,2,3}(t1)-T[3,2]{1,2,3}(t1)] -3 sqrt(2) T[2,0]{1,2,3}(t2) +sqrt(3) [T[2,-2]{1,2,3}(t2)+T[2,2]{1,2,3}(t2)] -3 [T[2,-2]{1,2,3}(t3)+T[2,2]{1,2,3}(t3)] -sqrt(6)T[2,0]{1,2,3}(t3) -2 sqrt(3) T[0,0]{1,2,3}(t4) ]"},
    {"Ixzz", "(1)/(30) [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] +4 sqrt(15) [T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] +5 sqrt(3) [T[1,-1]{1,2,3}(t2)-T[1,1]{1,2,3}(t2)] +5 i sqrt(3) [T[2,-1]{1,2,3}(t2)+T[2,1]{1,2,3}(t2)] +15 [T[1,-1]{1,2,3}(t3)-T[1,1]{1,2,3}(t3)] +15 i [T[2,-1]{1,2,3}(t3)+T[2,1]{1,2,3}(t3)] ]"},
    {"Iyxx", "(1)/(30) [ 2 i sqrt(15) [T[1,-1]{1,2,3}(t1)+T[1,1]{1,2,3}(t1)] -i sqrt(15) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] +15 i [T[3,-3]{1,2,3}(t1)+T[3,3]{1,2,3}(t1)] +5 i sqrt(3) [T[1,-1]{1,2,3}(t2)+T[1,1]{1,2,3}(t2)] +5 sqrt(3) [T[2,-1]{1,2,3}(t2)-T[2,1]{1,2,3}(t2)] +15 i [T[1,-1]{1,2,3}(t3)+T[1,1]{1,2,3}(t3)] +15 [T[2,-1]{1,2,3}(t3)-T[2,1]{1,2,3}(t3)] ]"},
    {"Iyxy", "(1)/(30) [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] -sqrt(15) [T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] -15 [T[3,-3]{1,2,3}(t1)-T[3,3]{1,2,3}(t1)] +5 sqrt(3) [T[1,-1]{1,2,3}(t2)-T[1,1]{1,2,3}(t2)] -5 i sqrt(3) [T[2,-1]{1,2,3}(t2)+T[2,1]{1,2,3}(t2)] -15[T[1,-1]{1,2,3}(t3)-T[1,1]{1,2,3}(t3)] +15 i [T[2,-1]{1,2,3}(t3)+T[2,1]{1,2,3}(t3)] ]"},
    {"Iyxz", "-(1)/(2sqrt(3))[ -i sqrt(2) [T[3,-2]{1,2,3}(t1)-T[3,2]{1,2,3}(t1)] +2 [T[2,-2]{1,2,3}(t2)+T[2,2]{1,2,3}(t2)] -2 sqrt(2) T[2,0]{1,2,3}(t3) +2 T[0,0]{1,2,3}(t4) ]"},
    {"Iyyx", "(1)/(30) [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] -sqrt(15)[T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] -15 [T[3,-3]{1,2,3}(t1)-T[3,3]{1,2,3}(t1)] -10 sqrt(3) [T[1,-1]{1,2,3}(t2)-T[1,1]{1,2,3}(t2)] +10 i sqrt(3) [T[2,-1]{1,2,3}(t2)+T[2,1]{1,2,3}(t2)] ]"},
    {"Iyyy", "(1)/(10) i [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)+T[1,1]{1,2,3}(t1)] -sqrt(15) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] -5[T[3,-3]{1,2,3}(t1)+T[3,3]{1,2,3}(t1)] ]"},
    {"Iyyz", "(1)/(30) [ 2 sqrt(30)T[1,0]{1,2,3}(t1) -6 sqrt(5) T[3,0]{1,2,3}(t1) -5 sqrt(6) [T[3,-2]{1,2,3}(t1)+T[3,2]{1,2,3}(t1)] -10 sqrt(6) T[1,0]{1,2,3}(t2) -10 i sqrt(3)[T[2,-2]{1,2,3}(t2)-T[2,2]{1,2,3}(t2)] ]"},
    {"Iyzx", "(1)/(6) [ i sqrt(6)[T[3,-2]{1,2,3}(t1)-T[3,2]{1,2,3}(t1)] +3 sqrt(2)T[2,0]{1,2,3}(t2) +sqrt(3) [T[2,-2]{1,2,3}(t2)+T[2,2]{1,2,3}(t2)] +sqrt(6)T[2,0]{1,2,3}(t3) -3 [T[2,-2]{1,2,3}(t3)+T[2,2]{1,2,3}(t3)] +2 sqrt(3) T[0,0]{1,2,3}(t4) ]"},
    {"Iyzy", "(1)/(30) [ 2 sqrt(30) T[1,0]{1,2,3}(t1) -6 sqrt(5) T[3,0]{1,2,3}(t1) -5 sqrt(6)[T[3,-2]{1,2,3}(t1)+T[3,2]{1,2,3}(t1)] +5 sqrt(6) T[1,0]{1,2,3}(t2) +5 i sqrt(3) [T[2,-2]{1,2,3}(t2)-T[2,2]{1,2,3}(t2)] -15 sqrt(2)T[1,0]{1,2,3}(t3) -15 i [T[2,-2]{1,2,3}(t3)-T[2,2]{1,2,3}(t3)] ]"},
    {"Iyzz", "(1)/(30) [ 2 i sqrt(15) [T[1,-1]{1,2,3}(t1)+T[1,1]{1,2,3}(t1)] +4 i sqrt(15) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] +5 i sqrt(3) [T[1,-1]{1,2,3}(t2)+T[1,1]{1,2,3}(t2)] -5 sqrt(3) [T[2,-1]{1,2,3}(t2)-T[2,1]{1,2,3}(t2)] +15 i [T[1,-1]{1,2,3}(t3)+T[1,1]{1,2,3}(t3)] -15 [T[2,-1]{1,2,3}(t3)-T[2,1]{1,2,3}(t3)] ]"},
    {"Izxx", "(1)/(30) [ 2 sqrt(30) T[1,0]{1,2,3}(t1) -6 sqrt(5) T[3,0]{1,2,3}(t1) +5 sqrt(6)[T[3,-2]{1,2,3}(t1)+T[3,2]{1,2,3}(t1)] +5 sqrt(6) T[1,0]{1,2,3}(t2) -5 i sqrt(3) [T[2,-2]{1,2,3}(t2)-T[2,2]{1,2,3}(t2)] +15 sqrt(2)T[1,0]{1,2,3}(t3) -15 i [T[2,-2]{1,2,3}(t3)-T[2,2]{1,2,3}(t3)] ]"},
    {"Izxy", "(1)/(6) [ +i sqrt(6)[T[3,-2]{1,2,3}(t1)-T[3,2]{1,2,3}(t1)] +sqrt(3) [T[2,-2]{1,2,3}(t2)+T[2,2]{1,2,3}(t2)] -3 sqrt(2) T[2,0]{1,2,3}(t2) +3 [T[2,-2]{1,2,3}(t3)+T[2,2]{1,2,3}(t3)] +sqrt(6) T[2,0]{1,2,3}(t3) +2 sqrt(3) T[0,0]{1,2,3}(t4) ]"},
    {"Izxz", "(1)/(30) [ 2 sqrt(15) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] +4 sqrt(15) [T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] +5 sqrt(3) [T[1,-1]{1,2,3}(t2)-T[1,1]{1,2,3}(t2)] +5 i sqrt(3) [T[2,-1]{1,2,3}(t2)+T[2,1]{1,2,3}(t2)] -15[T[1,-1]{1,2,3}(t3)-T[1,1]{1,2,3}(t3)] -15 i [T[2,-1]{1,2,3}(t3)+T[2,1]{1,2,3}(t3)] ]"},
    {"Izyx", "(1)/(6) [ +i sqrt(6)[T[3,-2]{1,2,3}(t1)-T[3,2]{1,2,3}(t1)] +sqrt(3) [T[2,-2]{1,2,3}(t2)+T[2,2]{1,2,3}(t2)] +3 sqrt(2) T[2,0]{1,2,3}(t2) +3 [T[2,-2]{1,2,3}(t3)+T[2,2]{1,2,3}(t3)] -sqrt(6) T[2,0]{1,2,3}(t3) -2 sqrt(3) T[0,0]{1,2,3}(t4) ]"},
    {"Izyy", "(1)/(30) [ 2 sqrt(30) T[1,0]{1,2,3}(t1) -6 sqrt(5) T[3,0]{1,2,3}(t1) -5 sqrt(6)[T[3,-2]{1,2,3}(t1)+T[3,2]{1,2,3}(t1)] +5 sqrt(6) T[1,0]{1,2,3}(t2) +5 i sqrt(3) [T[2,-2]{1,2,3}(t2)-T[2,2]{1,2,3}(t2)] +15 sqrt(2)T[1,0]{1,2,3}(t3) +15 i [T[2,-2]{1,2,3}(t3)-T[2,2]{1,2,3}(t3)] ]"},
    {"Izyz", "(1)/(30) [ 2 i sqrt(15) [T[1,-1]{1,2,3}(t1)+T[1,1]{1,2,3}(t1)] +4 i sqrt(15) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] +5 i sqrt(3) [T[1,-1]{1,2,3}(t2)+T[1,1]{1,2,3}(t2)] -5 sqrt(3) [T[2,-1]{1,2,3}(t2)-T[2,1]{1,2,3}(t2)] -15 i [T[1,-1]{1,2,3}(t3)+T[1,1]{1,2,3}(t3)] +15 [T[2,-1]{1,2,3}(t3)-T[2,1]{1,2,3}(t3)] ]"},
    {"Izzx", "(1)/(5sqrt(3))[ sqrt(5) [T[1,-1]{1,2,3}(t1)-T[1,1]{1,2,3}(t1)] +2 sqrt(5) [T[3,-1]{1,2,3}(t1)-T[3,1]{1,2,3}(t1)] -5 [T[1,-1]{1,2,3}(t2)-T[1,1]{1,2,3}(t2)] -5 i [T[2,-1]{1,2,3}(t2)+T[2,1]{1,2,3}(t2)] ]"},
    {"Izzy", "(1)/(5sqrt(3))[ i sqrt(5) [T[1,-1]{1,2,3}(t1)+T[1,1]{1,2,3}(t1)] +2 i sqrt(5) [T[3,-1]{1,2,3}(t1)+T[3,1]{1,2,3}(t1)] -5 i [T[1,-1]{1,2,3}(t2)+T[1,1]{1,2,3}(t2)] +5 [T[2,-1]{1,2,3}(t2)-T[2,1]{1,2,3}(t2)]]"},
    {"Izzz", "(1)/(sqrt(5))[ sqrt(6) T[1,0]{1,2,3}(t1) +2 T[3,0]{1,2,3}(t1)]"},
}};

// Multipole families "j|from|to" (3/2, k1, k2) in LISA families; T[j]{G} means the same m on both sides.
inline constexpr std::array<Row, 20> multipole_to_lisa{{
    {"0|3/2|3/2", "(1)/(sqrt(6)) [T[0]{1,2}+T[0]{1,3} +T[0]{2,3}+sqrt(3)T[0]{}]"},
    {"1|3/2|3/2", "(sqrt(10))/(6) [ T[1]{1}+ T[1]{2} + T[1]{3} -(sqrt(3))/(sqrt(5))T[1]{1,2,3}(t1)]"},
    {"2|3/2|3/2", "(1)/(sqrt(3))[T[2]{1,2}+T[2]{1,3} +T[2]{2,3} ]"},
    {"3|3/2|3/2", "T[3]{1,2,3}(t1)"},
    {"0|k1|k1", "(sqrt(3))/(6) [T[0]{1,2} -2T[0]{1,3}-2T[0]{2,3}+(3)/(sqrt(3))T[0]{}]"},
    {"1|k1|k1", "(1)/(6) [2T[1]{1}+2T[1]{2}-T[1]{3} -sqrt(15)T[1]{1,2,3}(t1)-2sqrt(3)T[1]{1,2,3}(t2) ]"},
    {"0|k2|k2", "(1)/(2)[-sqrt(3)T[0]{1,2} + T[0]{}]"},
    {"1|k2|k2", "(1)/(6)[3T[1]{3} - sqrt(15) T[1]{1,2,3}(t1) +2sqrt(3)T[1]{1,2,3}(t2)]"},
    {"1|3/2|k1", "(1)/(6) [ sqrt(2)(-T[1]{1} -T[1]{2}+2T[1]{3})+3i (T[1]{1,3}+T[1]{2,3})-sqrt(6)T[1]{1,2,3}(t2)]"},
    {"2|3/2|k1", "(1)/(6) [sqrt(3)(-2T[2]{1,2}+T[2]{1,3} +T[2]{2,3})+3i sqrt(2)T[2]{1,2,3}(t2)]"},
    {"1|k1|3/2", "(1)/(6) [ sqrt(2)(T[1]{1} +T[1]{2}-2T[1]{3})+3i (T[1]{1,3}+T[1]{2,3})+sqrt(6)T[1]{1,2,3}(t2)]"},
    {"2|k1|3/2", "(1)/(6) [sqrt(3)(2T[2]{1,2} -T[2]{1,3}-T[2]{2,3})+3i sqrt(2)T[2]{1,2,3}(t2)]"},
    {"1|3/2|k2", "(1)/(2sqrt(3)) [ sqrt(2)(-T[1]{1} +T[1]{2})+i (2T[1]{1,2}+T[1]{1,3}-T[1]{2,3})-sqrt(2)T[1]{1,2,3}(t3)]"},
    {"2|3/2|k2", "(1)/(2) [ -T[2]{1,3}+T[2]{2,3}+i sqrt(2)T[2]{1,2,3}(t3)]"},
    {"1|k2|3/2", "(1)/(2sqrt(3)) [ sqrt(2)(T[1]{1} -T[1]{2})+i (2T[1]{1,2}+T[1]{1,3}-T[1]{2,3})+sqrt(2)T[1]{1,2,3}(t3)]"},
    {"2|k2|3/2", "(1)/(2) [T[2]{1,3}-T[2]{2,3}+i sqrt(2)T[2]{1,2,3}(t3)]"},
    {"0|k1|k2", "(1)/(2) [ -T[0]{1,3}+T[0]{2,3}-i sqrt(2)T[0]{1,2,3}(t4)]"},
    {"1|k1|k2", "(1)/(2sqrt(3)) [(-T[1]{1}+T[1]{2}) +i sqrt(2)(T[1]{1,2}-T[1]{1,3}+T[1]{2,3})+2T[1]{1,2,3}(t3)]"},
    {"0|k2|k1", "(1)/(2) [ -T[0]{1,3}+T[0]{2,3}+i sqrt(2)T[0]{1,2,3}(t4)]"},
    {"1|k2|k1", "(1)/(2sqrt(3)) [(-T[1]{1}+T[1]{2}) -i sqrt(2)(T[1]{1,2}-T[1]{1,3}+T[1]{2,3})+2T[1]{1,2,3}(t3)]"},
}};

}  // namespace drops::tables
