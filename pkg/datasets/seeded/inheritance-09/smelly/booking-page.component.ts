import { Component, Injectable } from '@angular/core';
import { BaseBookingPageComponent } from './base-booking-page';

@Component({
  selector: 'app-booking-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class BookingPageComponent extends BaseBookingPageComponent {
  pageTitle = 'Booking Page';
}
