#include "lbw/cli.hpp"

int main(int argc, char** argv) { return lbw::cli::dispatch(argc, argv); }
