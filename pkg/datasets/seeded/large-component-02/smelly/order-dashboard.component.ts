import { Component } from '@angular/core';

@Component({
  selector: 'app-order-dashboard',
  template: `<p>{{ loadTotal }}</p>`
})
export class OrderDashboardComponent {
  loadTotal = 0;
  logTotal = 0;
  chartTotal = 0;

  loadOrder0(): void {
    this.loadTotal = this.loadTotal + 1;
    this.loadTotal = this.loadTotal + 2;
    this.loadTotal = this.loadTotal + 3;
    this.loadTotal = this.loadTotal + 4;
    this.loadTotal = this.loadTotal + 5;
    this.loadTotal = this.loadTotal + 6;
    this.loadTotal = this.loadTotal + 7;
    this.loadTotal = this.loadTotal + 8;
    this.loadTotal = this.loadTotal + 9;
    this.loadTotal = this.loadTotal + 10;
    this.loadTotal = this.loadTotal + 11;
    this.loadTotal = this.loadTotal + 12;
    this.loadTotal = this.loadTotal + 13;
    this.loadTotal = this.loadTotal + 14;
    this.loadTotal = this.loadTotal + 15;
    this.loadTotal = this.loadTotal + 16;
    this.loadTotal = this.loadTotal + 17;
    this.loadTotal = this.loadTotal + 18;
    this.loadTotal = this.loadTotal + 19;
    this.loadTotal = this.loadTotal + 20;
    this.loadTotal = this.loadTotal + 21;
    this.loadTotal = this.loadTotal + 22;
    this.loadTotal = this.loadTotal + 23;
  }

  loadOrder1(): void {
    this.loadTotal = this.loadTotal + 1;
    this.loadTotal = this.loadTotal + 2;
    this.loadTotal = this.loadTotal + 3;
    this.loadTotal = this.loadTotal + 4;
    this.loadTotal = this.loadTotal + 5;
    this.loadTotal = this.loadTotal + 6;
    this.loadTotal = this.loadTotal + 7;
    this.loadTotal = this.loadTotal + 8;
    this.loadTotal = this.loadTotal + 9;
    this.loadTotal = this.loadTotal + 10;
    this.loadTotal = this.loadTotal + 11;
    this.loadTotal = this.loadTotal + 12;
    this.loadTotal = this.loadTotal + 13;
    this.loadTotal = this.loadTotal + 14;
    this.loadTotal = this.loadTotal + 15;
    this.loadTotal = this.loadTotal + 16;
    this.loadTotal = this.loadTotal + 17;
    this.loadTotal = this.loadTotal + 18;
    this.loadTotal = this.loadTotal + 19;
    this.loadTotal = this.loadTotal + 20;
    this.loadTotal = this.loadTotal + 21;
    this.loadTotal = this.loadTotal + 22;
    this.loadTotal = this.loadTotal + 23;
  }

  loadOrder2(): void {
    this.loadTotal = this.loadTotal + 1;
    this.loadTotal = this.loadTotal + 2;
    this.loadTotal = this.loadTotal + 3;
    this.loadTotal = this.loadTotal + 4;
    this.loadTotal = this.loadTotal + 5;
    this.loadTotal = this.loadTotal + 6;
    this.loadTotal = this.loadTotal + 7;
    this.loadTotal = this.loadTotal + 8;
    this.loadTotal = this.loadTotal + 9;
    this.loadTotal = this.loadTotal + 10;
    this.loadTotal = this.loadTotal + 11;
    this.loadTotal = this.loadTotal + 12;
    this.loadTotal = this.loadTotal + 13;
    this.loadTotal = this.loadTotal + 14;
    this.loadTotal = this.loadTotal + 15;
    this.loadTotal = this.loadTotal + 16;
    this.loadTotal = this.loadTotal + 17;
    this.loadTotal = this.loadTotal + 18;
    this.loadTotal = this.loadTotal + 19;
    this.loadTotal = this.loadTotal + 20;
    this.loadTotal = this.loadTotal + 21;
    this.loadTotal = this.loadTotal + 22;
    this.loadTotal = this.loadTotal + 23;
  }

  logOrder0(): void {
    this.logTotal = this.logTotal + 1;
    this.logTotal = this.logTotal + 2;
    this.logTotal = this.logTotal + 3;
    this.logTotal = this.logTotal + 4;
    this.logTotal = this.logTotal + 5;
    this.logTotal = this.logTotal + 6;
    this.logTotal = this.logTotal + 7;
    this.logTotal = this.logTotal + 8;
    this.logTotal = this.logTotal + 9;
    this.logTotal = this.logTotal + 10;
    this.logTotal = this.logTotal + 11;
    this.logTotal = this.logTotal + 12;
    this.logTotal = this.logTotal + 13;
    this.logTotal = this.logTotal + 14;
    this.logTotal = this.logTotal + 15;
    this.logTotal = this.logTotal + 16;
    this.logTotal = this.logTotal + 17;
    this.logTotal = this.logTotal + 18;
    this.logTotal = this.logTotal + 19;
    this.logTotal = this.logTotal + 20;
    this.logTotal = this.logTotal + 21;
    this.logTotal = this.logTotal + 22;
    this.logTotal = this.logTotal + 23;
  }

  logOrder1(): void {
    this.logTotal = this.logTotal + 1;
    this.logTotal = this.logTotal + 2;
    this.logTotal = this.logTotal + 3;
    this.logTotal = this.logTotal + 4;
    this.logTotal = this.logTotal + 5;
    this.logTotal = this.logTotal + 6;
    this.logTotal = this.logTotal + 7;
    this.logTotal = this.logTotal + 8;
    this.logTotal = this.logTotal + 9;
    this.logTotal = this.logTotal + 10;
    this.logTotal = this.logTotal + 11;
    this.logTotal = this.logTotal + 12;
    this.logTotal = this.logTotal + 13;
    this.logTotal = this.logTotal + 14;
    this.logTotal = this.logTotal + 15;
    this.logTotal = this.logTotal + 16;
    this.logTotal = this.logTotal + 17;
    this.logTotal = this.logTotal + 18;
    this.logTotal = this.logTotal + 19;
    this.logTotal = this.logTotal + 20;
    this.logTotal = this.logTotal + 21;
    this.logTotal = this.logTotal + 22;
    this.logTotal = this.logTotal + 23;
  }

  logOrder2(): void {
    this.logTotal = this.logTotal + 1;
    this.logTotal = this.logTotal + 2;
    this.logTotal = this.logTotal + 3;
    this.logTotal = this.logTotal + 4;
    this.logTotal = this.logTotal + 5;
    this.logTotal = this.logTotal + 6;
    this.logTotal = this.logTotal + 7;
    this.logTotal = this.logTotal + 8;
    this.logTotal = this.logTotal + 9;
    this.logTotal = this.logTotal + 10;
    this.logTotal = this.logTotal + 11;
    this.logTotal = this.logTotal + 12;
    this.logTotal = this.logTotal + 13;
    this.logTotal = this.logTotal + 14;
    this.logTotal = this.logTotal + 15;
    this.logTotal = this.logTotal + 16;
    this.logTotal = this.logTotal + 17;
    this.logTotal = this.logTotal + 18;
    this.logTotal = this.logTotal + 19;
    this.logTotal = this.logTotal + 20;
    this.logTotal = this.logTotal + 21;
    this.logTotal = this.logTotal + 22;
    this.logTotal = this.logTotal + 23;
  }

  chartOrder0(): void {
    this.chartTotal = this.chartTotal + 1;
    this.chartTotal = this.chartTotal + 2;
    this.chartTotal = this.chartTotal + 3;
    this.chartTotal = this.chartTotal + 4;
    this.chartTotal = this.chartTotal + 5;
    this.chartTotal = this.chartTotal + 6;
    this.chartTotal = this.chartTotal + 7;
    this.chartTotal = this.chartTotal + 8;
    this.chartTotal = this.chartTotal + 9;
    this.chartTotal = this.chartTotal + 10;
    this.chartTotal = this.chartTotal + 11;
    this.chartTotal = this.chartTotal + 12;
    this.chartTotal = this.chartTotal + 13;
    this.chartTotal = this.chartTotal + 14;
    this.chartTotal = this.chartTotal + 15;
    this.chartTotal = this.chartTotal + 16;
    this.chartTotal = this.chartTotal + 17;
    this.chartTotal = this.chartTotal + 18;
    this.chartTotal = this.chartTotal + 19;
    this.chartTotal = this.chartTotal + 20;
    this.chartTotal = this.chartTotal + 21;
    this.chartTotal = this.chartTotal + 22;
    this.chartTotal = this.chartTotal + 23;
  }

  chartOrder1(): void {
    this.chartTotal = this.chartTotal + 1;
    this.chartTotal = this.chartTotal + 2;
    this.chartTotal = this.chartTotal + 3;
    this.chartTotal = this.chartTotal + 4;
    this.chartTotal = this.chartTotal + 5;
    this.chartTotal = this.chartTotal + 6;
    this.chartTotal = this.chartTotal + 7;
    this.chartTotal = this.chartTotal + 8;
    this.chartTotal = this.chartTotal + 9;
    this.chartTotal = this.chartTotal + 10;
    this.chartTotal = this.chartTotal + 11;
    this.chartTotal = this.chartTotal + 12;
    this.chartTotal = this.chartTotal + 13;
    this.chartTotal = this.chartTotal + 14;
    this.chartTotal = this.chartTotal + 15;
    this.chartTotal = this.chartTotal + 16;
    this.chartTotal = this.chartTotal + 17;
    this.chartTotal = this.chartTotal + 18;
    this.chartTotal = this.chartTotal + 19;
    this.chartTotal = this.chartTotal + 20;
    this.chartTotal = this.chartTotal + 21;
    this.chartTotal = this.chartTotal + 22;
    this.chartTotal = this.chartTotal + 23;
  }

  chartOrder2(): void {
    this.chartTotal = this.chartTotal + 1;
    this.chartTotal = this.chartTotal + 2;
    this.chartTotal = this.chartTotal + 3;
    this.chartTotal = this.chartTotal + 4;
    this.chartTotal = this.chartTotal + 5;
    this.chartTotal = this.chartTotal + 6;
    this.chartTotal = this.chartTotal + 7;
    this.chartTotal = this.chartTotal + 8;
    this.chartTotal = this.chartTotal + 9;
    this.chartTotal = this.chartTotal + 10;
    this.chartTotal = this.chartTotal + 11;
    this.chartTotal = this.chartTotal + 12;
    this.chartTotal = this.chartTotal + 13;
    this.chartTotal = this.chartTotal + 14;
    this.chartTotal = this.chartTotal + 15;
    this.chartTotal = this.chartTotal + 16;
    this.chartTotal = this.chartTotal + 17;
    this.chartTotal = this.chartTotal + 18;
    this.chartTotal = this.chartTotal + 19;
    this.chartTotal = this.chartTotal + 20;
    this.chartTotal = this.chartTotal + 21;
    this.chartTotal = this.chartTotal + 22;
    this.chartTotal = this.chartTotal + 23;
  }
}
