#include "polycurv/cli.hpp"

int main(int argc, char** argv) {
    return polycurv::run_cli(argc, argv);
}
