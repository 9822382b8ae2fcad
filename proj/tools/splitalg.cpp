#include <iostream>
#include <string>
#include <vector>

#include "splitalg/cli.hpp"

int main(int argc, char** argv)
{
	std::vector<std::string> args(argv, argv + argc);
	return splitalg::cli::run(args, std::cout, std::cerr);
}
