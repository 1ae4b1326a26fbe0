#include "slocc/oracle.h"

#include <string>

#include "slocc/error.h"

namespace slocc::oracle {

namespace {

void require_qubits(const StateVector &state, int n) {
    if (state.num_qubits() != n) {
        throw Error(
            ErrorKind::SizeMismatch,
            "oracle expects " + std::to_string(n) + " qubits, got " + std::to_string(state.num_qubits()));
    }
}

}  // namespace

Complex iv2(const StateVector &s) {
    require_qubits(s, 2);
    auto a = s.amplitudes();
    return a[0] * a[3] - a[1] * a[2];
}

Complex iv4(const StateVector &s) {
    require_qubits(s, 4);
    auto a = s.amplitudes();
    return (a[0] * a[15] - a[1] * a[14]) + (a[6] * a[9] - a[7] * a[8]) - (a[2] * a[13] - a[3] * a[12]) -
           (a[4] * a[11] - a[5] * a[10]);
}

Complex iv6(const StateVector &s) {
    require_qubits(s, 6);
    auto a = s.amplitudes();
    return (a[0] * a[63] - a[1] * a[62]) + (a[30] * a[33] - a[31] * a[32]) - (a[2] * a[61] - a[3] * a[60]) -
           (a[28] * a[35] - a[29] * a[34])
           - (a[4] * a[59] - a[5] * a[58]) - (a[26] * a[37] - a[27] * a[36]) + (a[6] * a[57] - a[7] * a[56]) +
           (a[24] * a[39] - a[25] * a[38])
           - (a[8] * a[55] - a[9] * a[54]) - (a[22] * a[41] - a[23] * a[40]) + (a[10] * a[53] - a[11] * a[52]) +
           (a[20] * a[43] - a[21] * a[42])
           + (a[12] * a[51] - a[13] * a[50]) + (a[18] * a[45] - a[19] * a[44]) - (a[14] * a[49] - a[15] * a[48]) -
           (a[16] * a[47] - a[17] * a[46]);
}

Complex odd3(const StateVector &s, Odd3Form form) {
    require_qubits(s, 3);
    auto a = s.amplitudes();
    switch (form) {
        case Odd3Form::Main: {
            Complex bar = (a[0] * a[7] - a[1] * a[6]) - (a[2] * a[5] - a[3] * a[4]);
            return bar * bar - 4.0 * (a[0] * a[3] - a[1] * a[2]) * (a[4] * a[7] - a[5] * a[6]);
        }
        case Odd3Form::Alt1: {
            Complex bar = (a[0] * a[7] - a[3] * a[4]) + (a[1] * a[6] - a[2] * a[5]);
            return bar * bar - 4.0 * (a[3] * a[5] - a[1] * a[7]) * (a[2] * a[4] - a[0] * a[6]);
        }
        case Odd3Form::Alt2: {
            Complex bar = a[0] * a[7] - a[3] * a[4] - (a[1] * a[6] - a[2] * a[5]);
            return bar * bar - 4.0 * (a[1] * a[4] - a[0] * a[5]) * (a[3] * a[6] - a[2] * a[7]);
        }
    }
    return {};
}

Complex odd5(const StateVector &s) {
    require_qubits(s, 5);
    auto a = s.amplitudes();
    Complex bar = -(a[2] * a[29] - a[3] * a[28] - a[12] * a[19] + a[13] * a[18]) -
                  (a[4] * a[27] - a[5] * a[26] - a[10] * a[21] + a[11] * a[20]) +
                  (a[0] * a[31] - a[1] * a[30] - a[14] * a[17] + a[15] * a[16]) +
                  (a[6] * a[25] - a[7] * a[24] - a[8] * a[23] + a[9] * a[22]);
    Complex lower = (a[0] * a[15] - a[1] * a[14]) + (a[6] * a[9] - a[7] * a[8]) - (a[2] * a[13] - a[3] * a[12]) -
                    (a[4] * a[11] - a[5] * a[10]);
    Complex upper = (a[16] * a[31] - a[17] * a[30]) + (a[22] * a[25] - a[23] * a[24]) -
                    (a[18] * a[29] - a[19] * a[28]) - (a[20] * a[27] - a[21] * a[26]);
    return bar * bar - 4.0 * lower * upper;
}

}  // namespace slocc::oracle
