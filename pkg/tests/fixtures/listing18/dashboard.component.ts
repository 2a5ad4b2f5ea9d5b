import { Component } from '@angular/core';

interface Row {
  id: number;
  label: string;
  value: number;
}

@Component({
  selector: 'app-dashboard',
  templateUrl: './dashboard.component.html'
})
export class DashboardComponent {
  rows: Row[] = [];
  filter = '';
  total = 0;

  loadUserData(): void {
    // related logic
    const step0 = this.rows.filter((r) => r.value > 0);
    this.total += step0.length;
    if (step0.length > 1) {
      this.filter = 'loadUserData-0';
    }
    const step1 = this.rows.filter((r) => r.value > 10);
    this.total += step1.length;
    if (step1.length > 2) {
      this.filter = 'loadUserData-1';
    }
    const step2 = this.rows.filter((r) => r.value > 20);
    this.total += step2.length;
    if (step2.length > 3) {
      this.filter = 'loadUserData-2';
    }
    const step3 = this.rows.filter((r) => r.value > 30);
    this.total += step3.length;
    if (step3.length > 4) {
      this.filter = 'loadUserData-3';
    }
    const step4 = this.rows.filter((r) => r.value > 40);
    this.total += step4.length;
    if (step4.length > 5) {
      this.filter = 'loadUserData-4';
    }
    const step5 = this.rows.filter((r) => r.value > 50);
    this.total += step5.length;
    if (step5.length > 6) {
      this.filter = 'loadUserData-5';
    }
    const step6 = this.rows.filter((r) => r.value > 60);
    this.total += step6.length;
    if (step6.length > 7) {
      this.filter = 'loadUserData-6';
    }
    const step7 = this.rows.filter((r) => r.value > 70);
    this.total += step7.length;
    if (step7.length > 8) {
      this.filter = 'loadUserData-7';
    }
  }

  loadStatistics(): void {
    // related logic
    const step0 = this.rows.filter((r) => r.value > 1);
    this.total += step0.length;
    if (step0.length > 1) {
      this.filter = 'loadStatistics-0';
    }
    const step1 = this.rows.filter((r) => r.value > 11);
    this.total += step1.length;
    if (step1.length > 2) {
      this.filter = 'loadStatistics-1';
    }
    const step2 = this.rows.filter((r) => r.value > 21);
    this.total += step2.length;
    if (step2.length > 3) {
      this.filter = 'loadStatistics-2';
    }
    const step3 = this.rows.filter((r) => r.value > 31);
    this.total += step3.length;
    if (step3.length > 4) {
      this.filter = 'loadStatistics-3';
    }
    const step4 = this.rows.filter((r) => r.value > 41);
    this.total += step4.length;
    if (step4.length > 5) {
      this.filter = 'loadStatistics-4';
    }
    const step5 = this.rows.filter((r) => r.value > 51);
    this.total += step5.length;
    if (step5.length > 6) {
      this.filter = 'loadStatistics-5';
    }
    const step6 = this.rows.filter((r) => r.value > 61);
    this.total += step6.length;
    if (step6.length > 7) {
      this.filter = 'loadStatistics-6';
    }
    const step7 = this.rows.filter((r) => r.value > 71);
    this.total += step7.length;
    if (step7.length > 8) {
      this.filter = 'loadStatistics-7';
    }
  }

  handleFilters(): void {
    // related logic
    const step0 = this.rows.filter((r) => r.value > 2);
    this.total += step0.length;
    if (step0.length > 1) {
      this.filter = 'handleFilters-0';
    }
    const step1 = this.rows.filter((r) => r.value > 12);
    this.total += step1.length;
    if (step1.length > 2) {
      this.filter = 'handleFilters-1';
    }
    const step2 = this.rows.filter((r) => r.value > 22);
    this.total += step2.length;
    if (step2.length > 3) {
      this.filter = 'handleFilters-2';
    }
    const step3 = this.rows.filter((r) => r.value > 32);
    this.total += step3.length;
    if (step3.length > 4) {
      this.filter = 'handleFilters-3';
    }
    const step4 = this.rows.filter((r) => r.value > 42);
    this.total += step4.length;
    if (step4.length > 5) {
      this.filter = 'handleFilters-4';
    }
    const step5 = this.rows.filter((r) => r.value > 52);
    this.total += step5.length;
    if (step5.length > 6) {
      this.filter = 'handleFilters-5';
    }
    const step6 = this.rows.filter((r) => r.value > 62);
    this.total += step6.length;
    if (step6.length > 7) {
      this.filter = 'handleFilters-6';
    }
    const step7 = this.rows.filter((r) => r.value > 72);
    this.total += step7.length;
    if (step7.length > 8) {
      this.filter = 'handleFilters-7';
    }
  }

  updateViewState(): void {
    // related logic
    const step0 = this.rows.filter((r) => r.value > 3);
    this.total += step0.length;
    if (step0.length > 1) {
      this.filter = 'updateViewState-0';
    }
    const step1 = this.rows.filter((r) => r.value > 13);
    this.total += step1.length;
    if (step1.length > 2) {
      this.filter = 'updateViewState-1';
    }
    const step2 = this.rows.filter((r) => r.value > 23);
    this.total += step2.length;
    if (step2.length > 3) {
      this.filter = 'updateViewState-2';
    }
    const step3 = this.rows.filter((r) => r.value > 33);
    this.total += step3.length;
    if (step3.length > 4) {
      this.filter = 'updateViewState-3';
    }
    const step4 = this.rows.filter((r) => r.value > 43);
    this.total += step4.length;
    if (step4.length > 5) {
      this.filter = 'updateViewState-4';
    }
    const step5 = this.rows.filter((r) => r.value > 53);
    this.total += step5.length;
    if (step5.length > 6) {
      this.filter = 'updateViewState-5';
    }
    const step6 = this.rows.filter((r) => r.value > 63);
    this.total += step6.length;
    if (step6.length > 7) {
      this.filter = 'updateViewState-6';
    }
    const step7 = this.rows.filter((r) => r.value > 73);
    this.total += step7.length;
    if (step7.length > 8) {
      this.filter = 'updateViewState-7';
    }
  }

  exportReport(): void {
    // related logic
    const step0 = this.rows.filter((r) => r.value > 4);
    this.total += step0.length;
    if (step0.length > 1) {
      this.filter = 'exportReport-0';
    }
    const step1 = this.rows.filter((r) => r.value > 14);
    this.total += step1.length;
    if (step1.length > 2) {
      this.filter = 'exportReport-1';
    }
    const step2 = this.rows.filter((r) => r.value > 24);
    this.total += step2.length;
    if (step2.length > 3) {
      this.filter = 'exportReport-2';
    }
    const step3 = this.rows.filter((r) => r.value > 34);
    this.total += step3.length;
    if (step3.length > 4) {
      this.filter = 'exportReport-3';
    }
    const step4 = this.rows.filter((r) => r.value > 44);
    this.total += step4.length;
    if (step4.length > 5) {
      this.filter = 'exportReport-4';
    }
    const step5 = this.rows.filter((r) => r.value > 54);
    this.total += step5.length;
    if (step5.length > 6) {
      this.filter = 'exportReport-5';
    }
    const step6 = this.rows.filter((r) => r.value > 64);
    this.total += step6.length;
    if (step6.length > 7) {
      this.filter = 'exportReport-6';
    }
    const step7 = this.rows.filter((r) => r.value > 74);
    this.total += step7.length;
    if (step7.length > 8) {
      this.filter = 'exportReport-7';
    }
  }
}
