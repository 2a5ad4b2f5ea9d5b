import { Component, Injectable } from '@angular/core';
import { PageTitleService } from './page-title.service';

@Component({
  selector: 'app-booking-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class BookingPageComponent {
  pageTitle = 'Booking Page';
  constructor(private titles: PageTitleService) {}
  ngOnInit() {
    this.titles.initPage(this.pageTitle);
  }
}
