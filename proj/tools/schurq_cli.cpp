#include <iostream>

int main() {
    std::cout << "schurq cli placeholder\n";
    return 0;
}
