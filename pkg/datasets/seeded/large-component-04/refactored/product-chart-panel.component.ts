import { Component } from '@angular/core';

@Component({
  selector: 'app-product-chart-panel',
  template: `<p>{{ chartTotal }}</p>`
})
export class ProductChartPanelComponent {
  chartTotal = 0;

  chartProduct0(): void {
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
    this.chartTotal = this.chartTotal + 24;
    this.chartTotal = this.chartTotal + 25;
    this.chartTotal = this.chartTotal + 26;
    this.chartTotal = this.chartTotal + 27;
    this.chartTotal = this.chartTotal + 28;
    this.chartTotal = this.chartTotal + 29;
  }

  chartProduct1(): void {
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
    this.chartTotal = this.chartTotal + 24;
    this.chartTotal = this.chartTotal + 25;
    this.chartTotal = this.chartTotal + 26;
    this.chartTotal = this.chartTotal + 27;
    this.chartTotal = this.chartTotal + 28;
    this.chartTotal = this.chartTotal + 29;
  }

  chartProduct2(): void {
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
    this.chartTotal = this.chartTotal + 24;
    this.chartTotal = this.chartTotal + 25;
    this.chartTotal = this.chartTotal + 26;
    this.chartTotal = this.chartTotal + 27;
    this.chartTotal = this.chartTotal + 28;
    this.chartTotal = this.chartTotal + 29;
  }
}
